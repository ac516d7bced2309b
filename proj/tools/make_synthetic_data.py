#!/usr/bin/env python3
"""Generates the synthetic data fixtures shipped under data/.

The fixtures are representative, not measured: a midlatitude-summer-like
atmosphere with an exactly linear temperature ramp below 15 km, a banded
source spectrum from a 5772 K Planck curve, and molecular line lists with
band structure resembling visible H2O / O2 absorption. Water-vapour line
strengths are scaled (H2O_WINDOW_SCALE / H2O_NIR_SCALE) so the shipped
atmosphere gives ~75% mean transmissivity in the 700-900 nm window.

Deterministic: fixed RNG seed, pure-Python arithmetic.
"""

import math
import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "data"

KB = 1.380649e-23      # J/K
M_AIR = 4.80959e-26    # kg, mean molecular mass of dry air
G = 9.80665            # m/s^2
ATM = 101325.0         # Pa

T0 = 294.0             # ground temperature [K]
T15 = 215.70           # 15 km temperature [K]

H2O_WINDOW_SCALE = 2.3  # calibration knob: 700-900 nm band strengths
H2O_NIR_SCALE = 1.0     # calibration knob: 940 nm band strengths


def temperature(z):
    if z <= 15.0:
        return T0 - (T0 - T15) / 15.0 * z
    if z <= 20.0:
        return T15
    return T15 + 1.7 * (z - 20.0)


def saturation_pressure(t_k):
    t = t_k - 273.15
    return 610.94 * math.exp(17.625 * t / (t + 243.04))


def write_profile():
    levels = []
    p = 1.0
    for z in range(0, 51):
        t = temperature(z)
        if z > 0:
            t_mid = 0.5 * (temperature(z - 1) + t)
            scale_height_km = KB * t_mid / (M_AIR * G) / 1000.0
            p = p * math.exp(-1.0 / scale_height_km)
        n_air = p * ATM / (KB * t) * 1e-6  # cm^-3
        if z < 13:
            rh = 0.65 * math.exp(-z / 10.0)
            n_h2o = rh * saturation_pressure(t) / (KB * t) * 1e-6
        else:
            n_h2o = 5e-6 * n_air
        levels.append((z, p, t, n_air, n_h2o))

    rows = ["# Synthetic midlatitude-summer-like profile (51 levels, 0-50 km).",
            "# z_km p_atm T_K n_air_cm3 n_h2o_cm3"]
    for z, p, t, n_air, n_h2o in levels:
        rows.append(f"{z:.1f} {p:.6e} {t:.2f} {n_air:.6e} {n_h2o:.6e}")
    (OUT / "midlatitude_summer.profile").write_text("\n".join(rows) + "\n")

    air_col = sum(0.5 * (levels[i][3] + levels[i + 1][3]) * 1e5 for i in range(50))
    h2o_col = sum(0.5 * (levels[i][4] + levels[i + 1][4]) * 1e5 for i in range(50))
    print(f"profile: air column {air_col:.4e} cm^-2, h2o column {h2o_col:.4e} cm^-2")


def planck_irradiance(lambda_nm):
    # top-of-atmosphere spectral irradiance [W m^-2 nm^-1] of a 5772 K disc
    h, c, kb = 6.62607015e-34, 2.99792458e8, KB
    lam = lambda_nm * 1e-9
    b = 2 * h * c * c / lam**5 / (math.exp(h * c / (lam * kb * 5772.0)) - 1.0)
    solid = math.pi * (6.957e8 / 1.496e11) ** 2
    return b * solid * 1e-9


def write_solar():
    edges = [256.0, 277.8, 295.1, 303.0, 310.0, 317.0, 325.0, 337.5, 350.0, 362.5,
             377.5, 392.5, 407.5, 425.0, 447.5, 472.5, 497.5, 527.5, 557.5, 592.5,
             632.5, 672.5, 712.5, 752.5, 797.5, 842.5, 892.5, 947.5, 1010.32]
    rows = ["# Synthetic banded source irradiance (5772 K Planck disc).",
            "# lambda_lo_nm,lambda_hi_nm,irradiance_W_m2_nm"]
    for lo, hi in zip(edges, edges[1:]):
        samples = [planck_irradiance(lo + (hi - lo) * (i + 0.5) / 16) for i in range(16)]
        rows.append(f"{lo:.6g},{hi:.6g},{sum(samples) / len(samples):.6g}")
    (OUT / "solar_visible_bands.csv").write_text("\n".join(rows) + "\n")


def f_field(value, width, prec):
    s = f"{value:{width}.{prec}f}"
    if len(s) > width:
        if s.startswith("0."):
            s = s[1:]
        elif s.startswith("-0."):
            s = "-" + s[2:]
    if len(s) > width:
        raise ValueError(f"{value} does not fit {width}.{prec}")
    return s.rjust(width)


def record(mol, iso, nu0, s, gair, gself, elow, nair, dair):
    row = (f"{mol:2d}{iso:1d}" + f_field(nu0, 12, 6) + f"{s:10.3E}" + " " * 10 +
           f_field(gair, 5, 4) + f_field(gself, 5, 3) + f_field(elow, 10, 4) +
           f_field(nair, 4, 2) + f_field(dair, 8, 6))
    row += " " * (160 - len(row))
    assert len(row) == 160
    return row


def h2o_band(rng, center, spread, n_lines, total_s):
    lines = []
    weights = []
    for _ in range(n_lines):
        nu = rng.gauss(center, spread)
        weights.append(10.0 ** rng.uniform(-3.5, 0.0))
        lines.append(nu)
    wsum = sum(weights)
    out = []
    for nu, w in zip(lines, weights):
        s = total_s * w / wsum
        e_low = min(max(rng.gauss(300.0, 140.0), 5.0), 800.0)
        g_air = rng.uniform(0.055, 0.105)
        g_self = g_air * rng.uniform(4.0, 6.0)
        n_air = rng.uniform(0.25, 0.45)
        d_air = rng.uniform(-0.012, 0.002)
        out.append(record(1, 1, nu, s, g_air, g_self, e_low, n_air, d_air))
    return out


def write_h2o():
    rng = random.Random(20060530)
    w = H2O_WINDOW_SCALE
    n = H2O_NIR_SCALE
    bands = [
        # (center cm^-1, spread, lines, total S at 296 K)
        (10613.0, 160.0, 2200, 9.0e-21 * n),   # 942 nm, dominant NIR band
        (11320.0, 110.0, 500, 2.8e-22 * w),    # 884 nm
        (12151.0, 140.0, 1400, 1.35e-21 * w),  # 823 nm
        (12985.0, 100.0, 300, 9.0e-23 * w),    # 770 nm
        (13830.0, 150.0, 1500, 1.6e-21 * w),   # 723 nm
        (14200.0, 110.0, 500, 5.5e-22 * w),    # 704 nm
        (15350.0, 130.0, 900, 7.0e-22),        # 651 nm
        (16820.0, 140.0, 700, 4.5e-22),        # 595 nm
        (17500.0, 110.0, 300, 1.2e-22),        # 571 nm
        (18390.0, 110.0, 250, 8.0e-23),        # 544 nm
    ]
    rows = []
    for center, spread, n_lines, total_s in bands:
        rows.extend(h2o_band(rng, center, spread, n_lines, total_s))
    # sparse weak background across the visible
    for _ in range(800):
        nu = rng.uniform(9900.0, 19000.0)
        s = 10.0 ** rng.uniform(-27.5, -25.0)
        rows.append(record(1, 1, nu, s,
                           rng.uniform(0.055, 0.105), rng.uniform(0.25, 0.5),
                           min(max(rng.gauss(300.0, 140.0), 5.0), 800.0),
                           rng.uniform(0.25, 0.45), rng.uniform(-0.012, 0.002)))
    rng.shuffle(rows)  # file order is not spectral order, as in real lists
    (OUT / "h2o_visible.par").write_text("\n".join(rows) + "\n")
    print(f"h2o_visible.par: {len(rows)} records")


def write_o2():
    rng = random.Random(19991231)
    rows = []
    for _ in range(260):  # A band, 762 nm
        nu = rng.gauss(13122.0, 28.0)
        s = 10.0 ** rng.uniform(-25.5, -23.6)
        rows.append(record(7, 1, nu, s, rng.uniform(0.04, 0.06), rng.uniform(0.04, 0.06),
                           min(max(rng.gauss(150.0, 90.0), 0.0), 500.0),
                           rng.uniform(0.65, 0.75), 0.0))
    for _ in range(140):  # B band, 688 nm
        nu = rng.gauss(14526.0, 22.0)
        s = 10.0 ** rng.uniform(-26.5, -24.8)
        rows.append(record(7, 1, nu, s, rng.uniform(0.04, 0.06), rng.uniform(0.04, 0.06),
                           min(max(rng.gauss(150.0, 90.0), 0.0), 500.0),
                           rng.uniform(0.65, 0.75), 0.0))
    rng.shuffle(rows)
    (OUT / "o2_visible.par").write_text("\n".join(rows) + "\n")
    print(f"o2_visible.par: {len(rows)} records")


if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    write_profile()
    write_solar()
    write_h2o()
    write_o2()
