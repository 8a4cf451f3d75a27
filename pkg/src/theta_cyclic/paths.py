"""Deterministic integration routes between branch points.

A route from one branch point to the next is a straight segment when
no other branch point comes near it; otherwise the segment detours
around each offending point along a circular arc.  Every choice
(detour radius, side, sweep) is a deterministic function of the
configuration, so identical inputs produce identical routes.

Side conventions: a detour bulges away from the offender when the
offender is off the segment, and bulges toward +Im ("pass above",
tie-break toward +Re) when the offender sits on the segment.  The
same pass-above convention fixes how the argument of (x - e) is
continued when the integration chain passes through the branch point
e itself: the incoming argument sweeps to the outgoing direction
through the upward direction pi/2.

Each arc reports the continued change of arg(x - e) along itself for
any branch point e off the arc; straight segments subtend less than
pi from any external point, so a principal-value difference is exact,
and circle arcs are cut into sweeps of at most pi/4, each short
enough relative to the clearance guaranteed by the router.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

# clearance (as a fraction of the minimal branch-point gap) below which
# a point counts as blocking a segment, and the detour radius
MARGIN_FRACTION = 0.30
DETOUR_FRACTION = 0.35
_MAX_SWEEP_PIECE = math.pi / 4


@dataclass(frozen=True)
class LineArc:
    z0: complex
    z1: complex

    def point(self, t):
        return self.z0 + (self.z1 - self.z0) * t

    def velocity(self, t):
        return np.full_like(np.asarray(t, dtype=float), self.z1 - self.z0, dtype=complex)

    def arg_delta(self, e: complex, t):
        # continued arg(x(t) - e) - arg(x(0) - e); valid for e off the arc
        pts = self.point(np.asarray(t, dtype=float))
        return np.angle((pts - e) / (self.z0 - e))

    @property
    def endpoint(self):
        return self.z1


@dataclass(frozen=True)
class CircleArc:
    center: complex
    radius: float
    theta0: float
    sweep: float

    def point(self, t):
        ang = self.theta0 + self.sweep * np.asarray(t, dtype=float)
        return self.center + self.radius * np.exp(1j * ang)

    def velocity(self, t):
        ang = self.theta0 + self.sweep * np.asarray(t, dtype=float)
        return 1j * self.sweep * self.radius * np.exp(1j * ang)

    def arg_delta(self, e: complex, t):
        t = np.asarray(t, dtype=float)
        if abs(e - self.center) < 1e-13 * max(1.0, abs(self.center)):
            return self.sweep * t
        n_pieces = max(1, math.ceil(abs(self.sweep) / _MAX_SWEEP_PIECE))
        cuts = np.linspace(0.0, 1.0, n_pieces + 1)
        cut_pts = self.point(cuts)
        base = np.zeros(n_pieces + 1)
        for i in range(n_pieces):
            base[i + 1] = base[i] + cmath.phase(
                (cut_pts[i + 1] - e) / (cut_pts[i] - e)
            )
        idx = np.minimum(np.searchsorted(cuts, t, side="right") - 1, n_pieces - 1)
        idx = np.maximum(idx, 0)
        pts = self.point(t)
        return base[idx] + np.angle((pts - e) / (cut_pts[idx] - e))

    @property
    def endpoint(self):
        return self.point(1.0)


def _offender_side(c_perp: float, direction: complex, scale: float) -> int:
    if abs(c_perp) > 1e-13 * scale:
        return -1 if c_perp > 0 else 1
    up = 1j * direction
    if up.imag > 1e-15:
        return 1
    if up.imag < -1e-15:
        return -1
    return 1 if up.real > 0 else -1


def route_between(a: complex, b: complex, others, d_min: float):
    """Arcs from a to b avoiding the points in `others`.

    d_min is the minimal pairwise distance of the full branch-point
    configuration; clearances scale with it.
    """
    d = b - a
    length = abs(d)
    if length == 0:
        raise ValidationError("coincident branch points")
    direction = d / length
    margin = MARGIN_FRACTION * d_min
    r = DETOUR_FRACTION * d_min

    offenders = []
    for p in others:
        s = ((p - a) / direction).real
        c = ((p - a) / direction).imag
        if -margin < s < length + margin and abs(c) < margin:
            # distance to the segment proper
            s_cl = min(max(s, 0.0), length)
            if abs(a + direction * s_cl - p) < margin:
                offenders.append((s, c, p))
    offenders.sort(key=lambda o: o[0])

    arcs = []
    cursor = a
    scale = max(abs(a), abs(b), 1.0)
    for s, c, p in offenders:
        if abs(c) >= r:
            raise ValidationError("branch-point configuration too degenerate to route")
        half_chord = math.sqrt(r * r - c * c)
        s_in, s_out = s - half_chord, s + half_chord
        if not (0 < s_in and s_out < length):
            raise ValidationError("branch-point configuration too degenerate to route")
        x_in = a + direction * s_in
        x_out = a + direction * s_out
        side = _offender_side(c, direction, scale)
        th_in = cmath.phase(x_in - p)
        th_out = cmath.phase(x_out - p)
        chosen = None
        for sweep in (
            (th_out - th_in) % (2 * math.pi),
            (th_out - th_in) % (2 * math.pi) - 2 * math.pi,
        ):
            mid = p + r * cmath.exp(1j * (th_in + sweep / 2))
            c_mid = ((mid - a) / direction).imag
            if (1 if c_mid - c > 0 else -1) == side:
                chosen = sweep
                break
        if chosen is None:
            raise ValidationError("could not orient a detour arc")
        if abs(x_in - cursor) > 1e-14 * scale:
            arcs.append(LineArc(cursor, x_in))
        arcs.append(CircleArc(p, r, th_in, chosen))
        cursor = x_out
    if abs(b - cursor) > 1e-14 * scale or not arcs:
        arcs.append(LineArc(cursor, b))
    return arcs


def pass_above_sweep(arg_in: float, dir_out: float) -> float:
    """Total change of arg(x - e) when the path passes through the
    branch point e, entering with continued argument arg_in and leaving
    in the direction dir_out (mod 2pi).

    The corner is resolved by an infinitesimal detour over the point:
    the argument sweeps from arg_in to the outgoing direction through
    the upward direction pi/2.
    """
    delta0 = (dir_out - arg_in) % (2 * math.pi)
    up_offset = (math.pi / 2 - arg_in) % (2 * math.pi)
    if up_offset <= delta0 + 1e-15:
        return delta0
    return delta0 - 2 * math.pi
