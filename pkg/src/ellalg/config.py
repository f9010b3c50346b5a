"""Fixture configuration: field, curve, named points, ample divisor,
windows, and grid.  Configs come from JSON files or the built-in presets.

Built-in geometry: the rank-one curve y^2 + y = x^3 - x over Q with the
non-torsion translation point alpha = (0, 0), ample divisors 3*Oinf and
9*Oinf, and named points p, q at alpha-indices -20 and -48.  The index
gaps exceed the orbit window by more than any translate used in a check, so p, q, and the ample support behave as three
independent orbits for the layering combinatorics, while all coordinates
stay small enough for fast exact arithmetic.  The prime-field mirrors use
the same equation modulo 10007.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .curve import Curve, Translation
from .divisors import parse_divisor
from .fields import field_from_name
from .sections import TCRContext


@dataclass
class Config:
    name: str
    field: str
    curve: dict
    alpha: object  # int (alpha-index unused), coordinate pair, or "(x,y)" text
    points: dict  # name -> alpha-index (int) or [x, y]
    ample: str
    orbit_window: int = 12
    translation_window: int = 256
    cp_window: int = 12
    cp_trunc: int = 6
    grid_lo: int = 13
    grid_size: int = 50
    extra: dict = dc_field(default_factory=dict)

    @classmethod
    def from_dict(cls, d):
        known = {f for f in cls.__dataclass_fields__}
        kwargs = {k: v for k, v in d.items() if k in known}
        kwargs["extra"] = {k: v for k, v in d.items() if k not in known}
        return cls(**kwargs)

    @classmethod
    def from_json(cls, path):
        with open(path) as fh:
            return cls.from_dict(json.load(fh))


class Fixture:
    """A fully built computation context."""

    def __init__(self, config):
        self.config = config
        fld = field_from_name(config.field)
        self.field = fld
        cc = config.curve
        self.curve = Curve(
            fld, cc.get("a1", 0), cc.get("a2", 0), cc.get("a3", 0),
            cc.get("a4", 0), cc.get("a6", 0),
        )
        ax, ay = config.alpha
        alpha = self.curve.point(fld(str(ax)), fld(str(ay)))
        self.translation = Translation(
            self.curve, alpha, window=config.translation_window,
            orbit_window=config.orbit_window,
        )
        self.points = {}
        for name, spec in config.points.items():
            if isinstance(spec, int):
                pt = self.translation.tau(self.curve.zero_point, spec)
            else:
                pt = self.curve.point(fld(str(spec[0])), fld(str(spec[1])))
            self.points[name] = pt
        self.orbit_window = config.orbit_window
        self.cp_window = config.cp_window
        self.cp_trunc = config.cp_trunc
        ample = parse_divisor(config.ample, self.curve, self.translation, self.points)
        self.ctx = TCRContext(
            self.curve, self.translation, ample,
            grid_lo=config.grid_lo, grid_size=config.grid_size,
        )
        self._check_layout()

    def _check_layout(self):
        """Named points and the ample support must be pairwise unresolvable
        within the orbit window, and grid indices must clear the window."""
        tr = self.translation
        O = self.curve.zero_point
        named = list(self.points.items())
        for i, (n1, p1) in enumerate(named):
            if tr.orbit_shift(O, p1, self.orbit_window) is not None:
                raise ValueError("point %s resolves into the ample orbit" % n1)
            for n2, p2 in named[i + 1:]:
                if tr.orbit_shift(p1, p2, self.orbit_window) is not None:
                    raise ValueError("points %s and %s share an orbit window" % (n1, n2))

    @property
    def mu(self):
        return self.ctx.mu

    def divisor(self, text):
        return parse_divisor(text, self.curve, self.translation, self.points)

    def point(self, name):
        return self.points[name]


_BUILTIN = {
    "q-mu3": {
        "name": "q-mu3",
        "field": "Q",
        "curve": {"a1": 0, "a2": 0, "a3": 1, "a4": -1, "a6": 0},
        "alpha": [0, 0],
        "points": {"p": -20, "q": -48},
        "ample": "3*Oinf",
    },
    "q-mu9": {
        "name": "q-mu9",
        "field": "Q",
        "curve": {"a1": 0, "a2": 0, "a3": 1, "a4": -1, "a6": 0},
        "alpha": [0, 0],
        "points": {"p": -20, "q": -48},
        "ample": "9*Oinf",
    },
    "fp-mu3": {
        "name": "fp-mu3",
        "field": "Fp:10007",
        "curve": {"a1": 0, "a2": 0, "a3": 1, "a4": -1, "a6": 0},
        "alpha": [0, 0],
        "points": {"p": -20, "q": -48},
        "ample": "3*Oinf",
    },
    "fp-mu9": {
        "name": "fp-mu9",
        "field": "Fp:10007",
        "curve": {"a1": 0, "a2": 0, "a3": 1, "a4": -1, "a6": 0},
        "alpha": [0, 0],
        "points": {"p": -20, "q": -48},
        "ample": "9*Oinf",
    },
}


def builtin_names():
    return sorted(_BUILTIN)


def load_fixture(name_or_path):
    if name_or_path in _BUILTIN:
        return Fixture(Config.from_dict(_BUILTIN[name_or_path]))
    return Fixture(Config.from_json(name_or_path))
