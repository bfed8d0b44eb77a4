"""
CIELAB conversion and the CIEDE2000 color difference, vectorized over ``(..., 3)`` arrays.
"""

from collections import namedtuple

import numpy as np
import colour

Ciede2000 = namedtuple("Ciede2000", ["delta_l", "delta_c", "delta_h", "s_l", "s_c", "s_h", "r_t", "delta_e"])

def srgb_to_lab(p):
    """Nonlinear sRGB in [0, 1] to CIE 1976 L*a*b* (D65, 2 degree observer), L* in [0, 100]."""
    return colour.XYZ_to_Lab(colour.sRGB_to_XYZ(np.asarray(p, dtype=np.float64)))

def _hue_angle(b, a):
    angle = np.degrees(np.arctan2(b, a)) % 360.0
    return np.where((a == 0) & (b == 0), 0.0, angle)

def ciede2000(lab1, lab2, k_l=1.0, k_c=1.0, k_h=1.0):
    """
    Every term of the CIEDE2000 difference between two Lab arrays. ``delta_h`` is the signed hue difference
    2 sqrt(C'1 C'2) sin(dh'/2); it vanishes when either color has zero chroma.
    """
    lab1, lab2 = np.asarray(lab1, dtype=np.float64), np.asarray(lab2, dtype=np.float64)
    l1, a1, b1 = np.moveaxis(lab1, -1, 0)
    l2, a2, b2 = np.moveaxis(lab2, -1, 0)

    c_bar7 = ((np.hypot(a1, b1) + np.hypot(a2, b2)) / 2) ** 7
    g = 0.5 * (1 - np.sqrt(c_bar7 / (c_bar7 + 25.0 ** 7)))
    a1p, a2p = (1 + g) * a1, (1 + g) * a2
    c1p, c2p = np.hypot(a1p, b1), np.hypot(a2p, b2)
    h1p, h2p = _hue_angle(b1, a1p), _hue_angle(b2, a2p)
    chroma_product = c1p * c2p
    neutral = chroma_product == 0

    dh = h2p - h1p
    dh = np.where(dh > 180, dh - 360, np.where(dh < -180, dh + 360, dh))
    dh = np.where(neutral, 0.0, dh)
    delta_l = l2 - l1
    delta_c = c2p - c1p
    delta_h = 2 * np.sqrt(chroma_product) * np.sin(np.radians(dh) / 2)

    l_bar = (l1 + l2) / 2
    c_bar = (c1p + c2p) / 2
    h_sum = h1p + h2p
    h_bar = np.where(np.abs(h1p - h2p) <= 180, h_sum / 2, np.where(h_sum < 360, (h_sum + 360) / 2, (h_sum - 360) / 2))
    h_bar = np.where(neutral, h_sum, h_bar)

    t = (1 - 0.17 * np.cos(np.radians(h_bar - 30)) + 0.24 * np.cos(np.radians(2 * h_bar))
         + 0.32 * np.cos(np.radians(3 * h_bar + 6)) - 0.20 * np.cos(np.radians(4 * h_bar - 63)))
    d_theta = 30 * np.exp(-(((h_bar - 275) / 25) ** 2))
    c_bar_p7 = c_bar ** 7
    r_c = 2 * np.sqrt(c_bar_p7 / (c_bar_p7 + 25.0 ** 7))
    s_l = 1 + 0.015 * (l_bar - 50) ** 2 / np.sqrt(20 + (l_bar - 50) ** 2)
    s_c = 1 + 0.045 * c_bar
    s_h = 1 + 0.015 * c_bar * t
    r_t = -np.sin(np.radians(2 * d_theta)) * r_c

    term_l, term_c, term_h = delta_l / (k_l * s_l), delta_c / (k_c * s_c), delta_h / (k_h * s_h)
    delta_e = np.sqrt(term_l ** 2 + term_c ** 2 + term_h ** 2 + r_t * term_c * term_h)
    return Ciede2000(delta_l, delta_c, delta_h, s_l, s_c, s_h, r_t, delta_e)

def delta_e_2000(lab1, lab2, k_l=1.0, k_c=1.0, k_h=1.0):
    return ciede2000(lab1, lab2, k_l=k_l, k_c=k_c, k_h=k_h).delta_e
