#!/usr/bin/env python
# coding: utf-8

import os, sys, unittest

import numpy as np

pkg_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))  # noqa
sys.path.insert(0, pkg_root)  # noqa
from hueforge.util.image import HdrImage, LdrImage
from hueforge.util.hue_plane import (max_saturated_color, decompose, recompose, compensate_pixel, compensate_image,
                                     hdr_target, MaxSaturatedColor, HuePlaneCoords, hdr_tolerance)
from hueforge.util.exceptions import ValidationError, DimensionMismatch

def random_pixels(count, seed=0, high=1.0):
    return np.random.RandomState(seed).uniform(0.0, high, size=(count, 3))

class TestMaxSaturatedColor(unittest.TestCase):
    def test_examples(self):
        target = max_saturated_color([0.3, 0.7, 0.5])
        np.testing.assert_allclose(target.color, [0.0, 1.0, 0.5])
        self.assertFalse(target.achromatic)
        np.testing.assert_array_equal(max_saturated_color([4.0, 2.0, 3.0]).color, [1.0, 0.0, 0.5])
        for gray in [0.0, 0.0, 0.0], [0.4, 0.4, 0.4], [7.0, 7.0, 7.0]:
            target = max_saturated_color(gray)
            self.assertTrue(target.achromatic)
            np.testing.assert_array_equal(target.color, [0.0, 0.0, 0.0])
        self.assertTrue(max_saturated_color([1.0, 1.0 + 1e-12, 1.0], tol=hdr_tolerance).achromatic)
        self.assertFalse(max_saturated_color([1.0, 1.0 + 1e-12, 1.0]).achromatic)
        with self.assertRaises(ValidationError):
            max_saturated_color([[0.1, 0.2]])

    def test_properties(self):
        x = random_pixels(10 ** 6, seed=1, high=10.0)
        target = max_saturated_color(x)
        self.assertFalse(target.achromatic.any())
        np.testing.assert_allclose(target.color.max(axis=-1), 1.0, rtol=0, atol=1e-12)
        np.testing.assert_allclose(target.color.min(axis=-1), 0.0, rtol=0, atol=1e-12)
        np.testing.assert_array_equal(np.argmax(target.color, axis=-1), np.argmax(x, axis=-1))
        np.testing.assert_array_equal(np.argmin(target.color, axis=-1), np.argmin(x, axis=-1))
        np.testing.assert_allclose(max_saturated_color(x * 37.5).color, target.color, atol=1e-9)
        np.testing.assert_allclose(max_saturated_color(x + 3.0).color, target.color, atol=1e-9)
        np.testing.assert_allclose(max_saturated_color(target.color).color, target.color, atol=1e-12)

class TestDecomposition(unittest.TestCase):
    def test_example(self):
        coords = decompose([0.3, 0.7, 0.5])
        self.assertAlmostEqual(float(coords.a_w), 0.3)
        self.assertAlmostEqual(float(coords.a_k), 0.3)
        self.assertAlmostEqual(float(coords.a_c), 0.4)
        np.testing.assert_allclose(recompose(coords), [0.3, 0.7, 0.5])

    def test_properties(self):
        x = random_pixels(10 ** 6, seed=2)
        coords = decompose(x)
        np.testing.assert_allclose(coords.a_w + coords.a_k + coords.a_c, 1.0, atol=1e-12)
        for weight in coords.a_w, coords.a_k, coords.a_c:
            self.assertTrue(np.all(weight >= 0) and np.all(weight <= 1))
        np.testing.assert_allclose(recompose(coords), x, atol=1e-12)
        hdr = random_pixels(10 ** 6, seed=9, high=10.0)
        coords = decompose(hdr)
        np.testing.assert_allclose(coords.a_w + coords.a_k + coords.a_c, 1.0, atol=1e-12)
        np.testing.assert_allclose(recompose(coords), hdr, atol=1e-9)

    def test_hdr_and_gray_pixels(self):
        coords = decompose([4.0, 2.0, 3.0])
        self.assertEqual(float(coords.a_k), -3.0)
        self.assertEqual(float(coords.a_c), 2.0)
        np.testing.assert_allclose(recompose(coords), [4.0, 2.0, 3.0])
        gray = decompose(np.array([[0.6, 0.6, 0.6], [0.0, 0.0, 0.0]]))
        self.assertTrue(gray.achromatic.all())
        np.testing.assert_allclose(gray.a_w + gray.a_k, 1.0)
        np.testing.assert_array_equal(recompose(gray), [[0.6, 0.6, 0.6], [0.0, 0.0, 0.0]])
        rebuilt = recompose(HuePlaneCoords(a_w=np.array(0.2), a_k=np.array(0.3), a_c=np.array(0.5),
                                           c=np.array([0.0, 1.0, 0.25]), achromatic=np.array(False)))
        np.testing.assert_allclose(rebuilt, [0.2, 0.7, 0.325])

class TestCompensation(unittest.TestCase):
    def test_example(self):
        np.testing.assert_array_equal(compensate_pixel([0.25, 0.75, 0.5], [1.0, 0.0, 0.25]), [0.75, 0.25, 0.375])
        compensated = compensate_pixel([0.3, 0.7, 0.5], [1.0, 0.0, 0.25])
        np.testing.assert_allclose(compensated, [0.7, 0.3, 0.4])
        np.testing.assert_array_equal(compensate_pixel([0.3, 0.7, 0.5], [0.0, 0.0, 0.0], achromatic=True),
                                      [0.3, 0.7, 0.5])
        target = MaxSaturatedColor(color=np.zeros(3), achromatic=np.array(True))
        np.testing.assert_array_equal(compensate_pixel([0.3, 0.7, 0.5], target), [0.3, 0.7, 0.5])

    def test_properties(self):
        x_prime = random_pixels(10 ** 6, seed=3)
        c_h = max_saturated_color(random_pixels(10 ** 6, seed=4, high=100.0)).color
        compensated = compensate_pixel(x_prime, c_h)
        self.assertTrue(np.all(compensated >= -1e-12) and np.all(compensated <= 1 + 1e-12))
        before, after = decompose(x_prime), decompose(compensated)
        np.testing.assert_allclose(after.a_w, before.a_w, atol=1e-12)
        np.testing.assert_allclose(after.a_k, before.a_k, atol=1e-12)
        np.testing.assert_allclose(after.a_c, before.a_c, atol=1e-12)
        chromatic = ~after.achromatic
        self.assertGreater(np.count_nonzero(chromatic), 10 ** 6 - 10)
        np.testing.assert_allclose(after.c[chromatic], c_h[chromatic], atol=1e-9)

    def test_gray_pixels_unchanged(self):
        gray = np.repeat(np.linspace(0, 1, 11)[:, None], 3, axis=1)
        compensated = compensate_pixel(gray, max_saturated_color(random_pixels(11, seed=5)).color)
        np.testing.assert_allclose(compensated, gray, atol=1e-15)

    def test_compensate_image(self):
        rng = np.random.RandomState(6)
        hdr = HdrImage(rng.uniform(0.01, 50.0, size=(32, 48, 3)))
        ldr = LdrImage(rng.randint(0, 256, size=(32, 48, 3)))
        compensated = compensate_image(ldr, hdr)
        self.assertEqual(compensated.size, (48, 32))
        exact = compensate_pixel(ldr.normalized(), hdr_target(hdr))
        self.assertLessEqual(np.abs(compensated.pixels - exact * 255).max(), 0.5 + 1e-9)
        gamma_target = hdr_target(hdr, gamma=2.2)
        np.testing.assert_allclose(gamma_target.color, max_saturated_color(hdr.pixels ** (1 / 2.2)).color)
        self.assertNotEqual(compensate_image(ldr, hdr, gamma=2.2), compensated)

    def test_requantized_hue(self):
        rng = np.random.RandomState(8)
        hdr = HdrImage(rng.uniform(0.01, 50.0, size=(200, 500, 3)))
        ldr = LdrImage(rng.randint(0, 256, size=(200, 500, 3)))
        result = max_saturated_color(compensate_image(ldr, hdr).normalized())
        target = hdr_target(hdr).color
        a_c = decompose(ldr.normalized()).a_c
        wide = a_c >= 8 / 255.0
        self.assertGreater(np.count_nonzero(wide), 90000)
        bound = 0.5 / (255 * a_c[wide])
        deviation = np.abs(result.color[wide] - target[wide]).max(axis=-1)
        self.assertTrue(np.all(deviation <= bound + 1e-9))

    def test_compensate_image_errors(self):
        hdr = HdrImage(np.ones((4, 4, 3)))
        with self.assertRaises(DimensionMismatch):
            compensate_image(LdrImage(np.zeros((4, 5, 3), dtype=np.uint8)), hdr)
        with self.assertRaises(ValidationError):
            compensate_image(np.zeros((4, 4, 3)), hdr)

    def test_achromatic_source(self):
        hdr = HdrImage(np.full((2, 2, 3), 5.0))
        ldr = LdrImage(np.array([[[200, 100, 50], [10, 10, 10]], [[0, 0, 0], [1, 2, 3]]], dtype=np.uint8))
        with self.assertLogs("hueforge.util.hue_plane", level="WARNING") as logs:
            compensated = compensate_image(ldr, hdr)
        self.assertIn("2 chromatic LDR pixels", logs.output[0])
        self.assertEqual(compensated, ldr)

if __name__ == '__main__':
    unittest.main()
