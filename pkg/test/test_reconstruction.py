#!/usr/bin/env python
# coding: utf-8

import os, sys, unittest

import numpy as np

pkg_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))  # noqa
sys.path.insert(0, pkg_root)  # noqa
from hueforge.util.image import HdrImage, LuminancePair
from hueforge.util.reconstruction import (ReconstructionConfig, round_half_away, color_ratio, gamma_encode, round_only,
                                          clip_only, quantize_clip, reconstruct)
from hueforge.util.tmo import world_luminance
from hueforge.util.exceptions import ValidationError, DimensionMismatch

class TestQuantization(unittest.TestCase):
    def test_round_half_away(self):
        np.testing.assert_array_equal(round_half_away([0.5, 1.5, 2.5, -0.5, -1.5, 0.49, 254.5]),
                                      [1, 2, 3, -1, -2, 0, 255])

    def test_quantize_clip(self):
        values = np.array([0.0, 1 / 255, 0.4 / 255, 1.0, 1.2, -0.1, 0.5, 0.25])
        ldr = quantize_clip(values.reshape(1, -1, 1).repeat(3, axis=2))
        self.assertEqual(ldr.pixels[0, :, 0].tolist(), [0, 1, 0, 255, 255, 0, 128, 64])
        values = np.array([-1.0, -0.1, 0.0, 0.001, 0.5, 0.999, 1.0, 1.2])
        ldr = quantize_clip(values.reshape(1, -1, 1).repeat(3, axis=2))
        self.assertEqual(ldr.pixels[0, :, 2].tolist(), [0, 0, 0, 0, 128, 255, 255, 255])
        levels = np.arange(256) / 255.0
        ldr = quantize_clip(np.stack([levels, levels[::-1], levels], axis=-1)[None])
        self.assertEqual(ldr.pixels[0, :, 0].tolist(), list(range(256)))
        self.assertEqual(ldr.pixels[0, :, 1].tolist(), list(range(255, -1, -1)))
        with self.assertRaises(ValidationError):
            quantize_clip(np.array([[[np.nan, 0.0, 0.0]]]))
        with self.assertRaises(ValidationError):
            quantize_clip(np.array([[[np.inf, 0.0, 0.0]]]))

    def test_round_and_clip_separately(self):
        np.testing.assert_array_equal(round_only([1.2, -0.1, 0.5]), [306, -26, 128])
        self.assertEqual(round_only([1.2]).dtype, np.int64)
        np.testing.assert_array_equal(clip_only([1.2, -0.1, 0.5]), [1.0, 0.0, 0.5])

    def test_gamma_encode(self):
        np.testing.assert_allclose(gamma_encode([0.0, 0.25, 1.0, 4.0], 2.0), [0.0, 0.5, 1.0, 2.0])
        np.testing.assert_array_equal(gamma_encode([-1.0], 2.2), [0.0])
        for bad in 0, -2.2:
            with self.assertRaises(ValidationError):
                gamma_encode([0.5], bad)

class TestReconstruction(unittest.TestCase):
    def setUp(self):
        self.hdr = HdrImage([[[2.0, 1.0, 0.5], [0.0, 0.0, 0.0]], [[40.0, 4.0, 4.0], [8.0, 8.0, 8.0]]])
        self.world = world_luminance(self.hdr)

    def test_color_ratio(self):
        display = np.full((2, 2), 0.5)
        ratio = color_ratio(self.hdr, LuminancePair(self.world, display))
        np.testing.assert_array_equal(ratio[0, 1], [0.0, 0.0, 0.0])
        np.testing.assert_allclose(ratio[1, 1], [0.5, 0.5, 0.5])
        np.testing.assert_allclose(ratio[0, 0] / ratio[0, 0].max(), [1.0, 0.5, 0.25])
        with self.assertRaises(ValidationError):
            color_ratio(self.hdr, LuminancePair(self.world[:1], display[:1]))

    def test_reconstruct(self):
        display = np.array([[0.2, 0.0], [0.9, 0.6]])
        lum = LuminancePair(self.world, display)
        linear = reconstruct(self.hdr, lum, ReconstructionConfig(gamma=None, record_prequant=True))
        np.testing.assert_allclose(linear.prequant, color_ratio(self.hdr, lum))
        self.assertEqual(linear.ldr.pixels[1, 1].tolist(), [153, 153, 153])
        self.assertEqual(linear.ldr.pixels[0, 1].tolist(), [0, 0, 0])
        self.assertEqual(linear.ldr.pixels[1, 0, 0], 255)

        encoded = reconstruct(self.hdr, lum, ReconstructionConfig(gamma=2.2))
        self.assertIsNone(encoded.prequant)
        expected = round_half_away(255 * 0.6 ** (1 / 2.2))
        self.assertEqual(encoded.ldr.pixels[1, 1].tolist(), [expected] * 3)

        with self.assertRaises(DimensionMismatch):
            reconstruct(self.hdr, LuminancePair(np.ones((3, 2)), np.ones((3, 2))))
        with self.assertRaises(ValidationError):
            reconstruct(self.hdr, lum, ReconstructionConfig(gamma=0))

if __name__ == '__main__':
    unittest.main()
