#!/usr/bin/env python
# coding: utf-8

import os, sys, io, struct, unittest

import numpy as np

pkg_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))  # noqa
sys.path.insert(0, pkg_root)  # noqa
from hueforge.util.image import HdrImage, LdrImage, new_hdr, new_ldr, as_normalized, check_same_size
from hueforge.util.imageio import (rgbe_to_float, read_radiance_hdr, read_pfm, write_pfm, read_ldr, write_ldr)
from hueforge.util.exceptions import FormatError, ValidationError, DimensionMismatch

rgbe_header = b"#?RADIANCE\nFORMAT=32-bit_rle_rgbe\nEXPOSURE=1.0\n\n"

def pfm(width, height, scale, payload):
    return "PF\n{} {}\n{}\n".format(width, height, scale).encode() + payload

class TestImageTypes(unittest.TestCase):
    def test_hdr_validation(self):
        img = new_hdr(2, 1, [[0.5, 1.0, 2.0], [0.0, 0.0, 0.0]])
        self.assertEqual(img.size, (2, 1))
        self.assertEqual(img.pixels.dtype, np.float64)
        with self.assertRaises(ValidationError):
            HdrImage([[[-0.1, 0.0, 0.0]]])
        with self.assertRaises(ValidationError):
            HdrImage([[[np.nan, 0.0, 0.0]]])
        with self.assertRaises(ValidationError):
            HdrImage([[[np.inf, 0.0, 0.0]]])
        with self.assertRaises(DimensionMismatch):
            new_hdr(3, 1, [[0.5, 1.0, 2.0], [0.0, 0.0, 0.0]])
        with self.assertRaises(ValidationError):
            HdrImage(np.zeros((0, 4, 3)))

    def test_ldr_validation(self):
        img = new_ldr(1, 1, [[10, 20, 30]])
        self.assertEqual(img.pixels.dtype, np.uint8)
        np.testing.assert_allclose(img.normalized(), [[[10 / 255, 20 / 255, 30 / 255]]])
        for bad in 256, -1, 1.5:
            with self.assertRaises(ValidationError):
                new_ldr(1, 1, [[bad, 0, 0]])
        with self.assertRaises(ValueError):
            img.pixels[0, 0, 0] = 1

    def test_helpers(self):
        ldr = new_ldr(1, 1, [[255, 0, 51]])
        np.testing.assert_allclose(as_normalized(ldr), [[[1.0, 0.0, 0.2]]])
        hdr = new_hdr(1, 1, [[3.0, 2.0, 1.0]])
        np.testing.assert_array_equal(as_normalized(hdr), [[[3.0, 2.0, 1.0]]])
        check_same_size(ldr, hdr)
        with self.assertRaises(DimensionMismatch):
            check_same_size(ldr, new_hdr(2, 1, np.ones((2, 3))))
        self.assertEqual(ldr, new_ldr(1, 1, [[255, 0, 51]]))
        self.assertNotEqual(ldr, new_ldr(1, 1, [[255, 0, 50]]))

class TestRadiance(unittest.TestCase):
    def test_rgbe_decoding(self):
        np.testing.assert_array_equal(rgbe_to_float([128, 64, 32, 129]), [1.0, 0.5, 0.25])
        np.testing.assert_array_equal(rgbe_to_float([128, 64, 32, 0]), [0.0, 0.0, 0.0])
        np.testing.assert_array_equal(rgbe_to_float([255, 0, 1, 136]), [255.0, 0.0, 1.0])

    def test_flat_scanlines(self):
        data = rgbe_header + b"-Y 2 +X 2\n" + bytes([128, 64, 32, 129, 0, 0, 0, 0,
                                                      128, 128, 128, 130, 64, 0, 0, 128])
        img = read_radiance_hdr(data)
        self.assertEqual(img.size, (2, 2))
        np.testing.assert_array_equal(img.pixels, [[[1.0, 0.5, 0.25], [0.0, 0.0, 0.0]],
                                                   [[2.0, 2.0, 2.0], [0.25, 0.0, 0.0]]])

    def test_rle_scanlines(self):
        scanline = bytes([2, 2, 0, 8,
                          128 + 8, 128,
                          128 + 4, 64, 128 + 4, 32,
                          8, 32, 32, 32, 32, 32, 32, 32, 32,
                          128 + 8, 129])
        img = read_radiance_hdr(io.BytesIO(rgbe_header + b"-Y 1 +X 8\n" + scanline))
        expected = np.array([[1.0, 0.5, 0.25]] * 4 + [[1.0, 0.25, 0.25]] * 4)
        np.testing.assert_array_equal(img.pixels[0], expected)

    def test_malformed(self):
        with self.assertRaises(FormatError):
            read_radiance_hdr(b"P6\n1 1\n255\n")
        with self.assertRaises(FormatError):
            read_radiance_hdr(b"#?RADIANCE\nFORMAT=32-bit_rle_xyze\n\n-Y 1 +X 1\n\x00\x00\x00\x00")
        with self.assertRaises(FormatError):
            read_radiance_hdr(rgbe_header + b"+Y 1 +X 1\n\x00\x00\x00\x00")
        with self.assertRaises(FormatError):
            read_radiance_hdr(rgbe_header + b"-Y 2 +X 1\n\x00\x00\x00\x00")
        with self.assertRaises(FormatError):
            read_radiance_hdr(rgbe_header + b"-Y 1 +X 8\n" + bytes([2, 2, 0, 8, 128 + 9, 1]))
        with self.assertRaises(FormatError):
            read_radiance_hdr(rgbe_header + b"-Y 1 +X 8\n" + bytes([2, 2, 0, 9]))

class TestPFM(unittest.TestCase):
    def test_little_endian_bottom_up(self):
        rows = np.array([[[1.0, 2.0, 3.0]], [[0.5, 0.25, 0.125]]], dtype="<f4")
        img = read_pfm(pfm(1, 2, -1.0, rows.tobytes()))
        np.testing.assert_array_equal(img.pixels, [[[0.5, 0.25, 0.125]], [[1.0, 2.0, 3.0]]])

    def test_big_endian(self):
        img = read_pfm(pfm(2, 1, 1.0, np.array([0.5, 1.0, 1.5, 2.0, 4.0, 8.0], dtype=">f4").tobytes()))
        np.testing.assert_array_equal(img.pixels, [[[0.5, 1.0, 1.5], [2.0, 4.0, 8.0]]])

    def test_endianness_mismatch(self):
        payload = struct.pack("<3I", 0x3FFFFFFF, 0x3FFFFFFF, 0x3FFFFFFF)
        self.assertTrue(np.isfinite(read_pfm(pfm(1, 1, -1.0, payload)).pixels).all())
        with self.assertRaisesRegex(ValidationError, "endianness"):
            read_pfm(pfm(1, 1, 1.0, payload))

    def test_write(self):
        img = HdrImage([[[0.5, 0.25, 0.125]], [[1.0, 2.0, 3.0]]])
        encoded = write_pfm(img)
        rows = np.array([[1.0, 2.0, 3.0], [0.5, 0.25, 0.125]], dtype="<f4")
        self.assertEqual(encoded, pfm(1, 2, -1.0, rows.tobytes()))
        self.assertEqual(read_pfm(encoded), img)
        with self.assertRaises(ValidationError):
            write_pfm(LdrImage([[[1, 2, 3]]]))

    def test_malformed(self):
        with self.assertRaises(FormatError):
            read_pfm(b"Pf\n1 1\n-1.0\n\x00\x00\x00\x00")
        with self.assertRaises(FormatError):
            read_pfm(b"PF\n1 x\n-1.0\n")
        with self.assertRaises(FormatError):
            read_pfm(pfm(2, 2, -1.0, b"\x00" * 12))

class TestLDRCodecs(unittest.TestCase):
    def test_ppm(self):
        img = new_ldr(1, 1, [[10, 20, 30]])
        self.assertEqual(write_ldr(img, format="ppm"), b"P6\n1 1\n255\n\x0a\x14\x1e")
        self.assertEqual(read_ldr(write_ldr(img, format="ppm")), img)

    def test_png(self):
        img = LdrImage(np.arange(48, dtype=np.uint8).reshape(4, 4, 3))
        payload = write_ldr(img)
        self.assertTrue(payload.startswith(b"\x89PNG"))
        self.assertNotIn(b"gAMA", payload)
        self.assertNotIn(b"iCCP", payload)
        self.assertEqual(read_ldr(io.BytesIO(payload)), img)

    def test_errors(self):
        with self.assertRaises(FormatError):
            read_ldr(b"not an image")
        with self.assertRaises(ValidationError):
            write_ldr(new_ldr(1, 1, [[0, 0, 0]]), format="jpeg")

if __name__ == '__main__':
    unittest.main()
