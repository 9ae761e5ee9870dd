"""Smoke test for the pylemniscate extension module."""

import math

import pylemniscate as pl


def close(a, b, tol=1e-12):
    return all(abs(x - y) <= tol for x, y in zip(a, b))


def main():
    cfg = pl.BernoulliConfig((-1.0, 0.0), (1.0, 0.0))
    assert cfg.c == 1.0

    s = pl.three_bar_solve(cfg, math.pi / 2)
    assert close(s.x, (-2 / 3, math.sqrt(2) / 3)), s
    assert abs(cfg.field(s.x)) < 1e-12
    assert abs(cfg.hyperbola_residual(s.q)) < 1e-12

    _, _, x, x_prime = pl.maclaurin_sample(cfg, 0.0)
    assert close(x, (-math.sqrt(2), 0.0)) and close(x_prime, (math.sqrt(2), 0.0))

    _, x, _ = pl.right_angle_solve(cfg, math.pi / 3)
    assert close(x, (math.sqrt(3) / 2, 0.5))

    assert close(pl.invert_between(cfg, (0.5, 0.5)), (1.0, 1.0))

    lem = pl.PolynomialLemniscate([(-1.0, 0.0), (1.0, 0.0)], 1.0)
    assert lem.expand() == "x^4 + 2 x^2 y^2 + y^4 - 2 x^2 + 2 y^2"
    contours = lem.trace(window=(-1.6, 1.6, -0.8, 0.8), grid=256)
    area = sum(c.area() for c in contours)
    assert len(contours) == 2 and abs(area - 2.0) < 2e-3, area

    svg = pl.figure_svg("threebar")
    assert svg.startswith("<?xml") and "</svg>" in svg

    try:
        pl.figure_svg("spiral")
    except ValueError as e:
        assert "spiral" in str(e)
    else:
        raise AssertionError("unknown preset accepted")

    checks = pl.verify_all(cfg, samples=500, small_samples=100, grid=128)
    failed = [name for name, (_, ok) in checks.items() if not ok]
    assert not failed, failed

    print(f"ok: {len(checks)} checks, traced area {area:.6f}")


if __name__ == "__main__":
    main()
