"""Small named LP instances used by the tests, notebooks and CLI experiments."""

import numpy as np

from .lp import LinearProgram

GOLDEN = 0.6180339887498949


def simplex_instance(z=(1.0, 1.0, 1.0)):
    """``x_i <= 1`` for i = 1..3."""
    return LinearProgram(np.eye(3), np.ones(3), z)


def cube_instance(d=3, z=None):
    """``-1 <= x_i <= 1``; rows are ``e_1..e_d`` followed by ``-e_1..-e_d``."""
    eye = np.eye(d)
    z = np.ones(d) if z is None else z
    return LinearProgram(np.vstack([eye, -eye]), np.ones(2 * d), z)


def contradictory_instance(z=(1.0, 1.0)):
    """``x_1 <= -1`` and ``-x_1 <= -1``: infeasible in the plane."""
    a = np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]])
    return LinearProgram(a, [-1.0, -1.0, 1.0, 1.0], z)


def parabola_instance(n=30, u_min=0.05):
    """A 3-d program with a long phase-2 shadow when unperturbed.

    Rows are ``(u_i, cos phi_i, sin phi_i)`` with right-hand side ``u_i**2``
    and objective ``e_1``.  The pairs ``(y_i, <a_i, z>) = (u_i**2, u_i)`` lie
    on a parabola, so every row shows up on the shadow of the lifted
    program; Gaussian noise scrambles that convex arrangement.
    """
    u = np.linspace(u_min, 1.0, n)
    phi = 2.0 * np.pi * GOLDEN * np.arange(n)
    a = np.stack([u, np.cos(phi), np.sin(phi)], axis=1)
    return LinearProgram(a, u**2, [1.0, 0.0, 0.0])


def random_instance(gen, n, d, spread=0.3):
    """Rows and right-hand sides Gaussian (sd `spread`) about random standard-normal centers."""
    a0 = gen.standard_normal((n, d))
    y0 = gen.standard_normal(n)
    z = gen.standard_normal(d)
    return LinearProgram(a0 + spread * gen.standard_normal((n, d)), y0 + spread * gen.standard_normal(n), z)
