"""Known closed forms for N = 1 and N = 2, kept as factored products.

Each entry is a tuple of factors in the canonical grammar; the value is their
product in the named ring.  These are comparison targets only, never inputs
to the computation.
"""

from __future__ import annotations

from functools import reduce

from .ring import GradedPolynomial, gl2_ring, parse_polynomial, pgl2gm_ring, sl2gm_ring

_R6 = "30*c1^6+151*c1^4*c2+196*c1^2*c2^2+64*c2^3"

_FACTORS: dict[str, tuple[str, tuple[str, ...]]] = {
    # N = 1, in Z[c1, c2]
    "r6": ("gl2", ("576", _R6)),
    "delta1_n1": ("gl2", ("-3456", "c1", "c2", _R6)),
    "f_n1_k1_m0": ("gl2", ("-576", "c1^3", _R6)),
    "f_n1_k1_m1": ("gl2", ("-576", "c1^2", "c2", _R6)),
    # N = 2, in Z[tau1, c2, c3]/(2 c3)
    "r9": (
        "pgl2gm",
        ("1152", "691*c2^4*tau1-38005*c2^3*tau1^3+309568*c2^2*tau1^5-497520*c2*tau1^7+124416*tau1^9"),
    ),
    "r10": (
        "pgl2gm",
        ("1152", "30*c2^5-6811*c2^4*tau1^2+133495*c2^3*tau1^4-481528*c2^2*tau1^6+327600*c2*tau1^8-20736*tau1^10"),
    ),
    "r18": (
        "pgl2gm",
        ("1152", "c2^5", "108314154642930*c2^4+1045672*c2^3*tau1^2-89483*c2^2*tau1^4+35*c2*tau1^6-4*tau1^8"),
    ),
    "r19": (
        "pgl2gm",
        ("2304", "c2^6", "tau1", "118203201*c2^3+180502*c2^2*tau1^2-7*c2*tau1^4+4*tau1^6"),
    ),
    "delta1_n2": (
        "pgl2gm",
        (
            "-995328",
            "tau1",
            "9*c2^2+160*c2*tau1^2+256*tau1^4",
            "100*c2^6+5369*c2^5*tau1^2+74074*c2^4*tau1^4+400257*c2^3*tau1^6"
            "+972972*c2^2*tau1^8+1061424*c2*tau1^10+419904*tau1^12",
        ),
    ),
    "delta1_n2_sl2gm": (
        "sl2gm",
        (
            "-1019215872",
            "9*c2^2+40*c2*tau1^2+16*tau1^4",
            "6400*c2^6*tau1+85904*c2^5*tau1^3+296296*c2^4*tau1^5+400257*c2^3*tau1^7"
            "+243243*c2^2*tau1^9+66339*c2*tau1^11+6561*tau1^13",
        ),
    ),
    "g_n2_k2_m0": (
        "pgl2gm",
        (
            "-11943936",
            "38562300*c2^9-109363770*c2^8*tau1^2+134699250*c2^7*tau1^4-303690446*c2^6*tau1^6"
            "+312766535*c2^5*tau1^8-259047756*c2^4*tau1^10+192326864*c2^3*tau1^12"
            "-128471616*c2^2*tau1^14+87091200*c2*tau1^16-11943936*tau1^18",
        ),
    ),
    "g_n2_k2_m1": (
        "pgl2gm",
        (
            "23887872",
            "c2",
            "tau1",
            "37514745*c2^8-64489645*c2^7*tau1^2+97095345*c2^6*tau1^4-170891502*c2^5*tau1^6"
            "+142583080*c2^4*tau1^8-114176800*c2^3*tau1^10+78779520*c2^2*tau1^12"
            "-54743040*c2*tau1^14+23887872*tau1^16",
        ),
    ),
}

_RINGS = {"gl2": gl2_ring, "pgl2gm": pgl2gm_ring, "sl2gm": sl2gm_ring}


def reference(name: str) -> GradedPolynomial:
    """Expanded value of the named closed form."""
    try:
        ring_name, factors = _FACTORS[name]
    except KeyError:
        raise KeyError(f"unknown reference polynomial {name!r}") from None
    ring = _RINGS[ring_name]()
    return reduce(lambda a, b: a * b, (parse_polynomial(f, ring) for f in factors))


def names() -> list[str]:
    return sorted(_FACTORS)


def ring_n1_ideal() -> list[GradedPolynomial]:
    """Generators ``6 c1 c2 r6, c1^3 r6, c1^2 c2 r6``."""
    r6 = reference("r6")
    c1, c2 = gl2_ring().gens()
    return [6 * c1 * c2 * r6, c1**3 * r6, c1**2 * c2 * r6]


def ring_n2_ideal() -> list[GradedPolynomial]:
    """Generators ``r9, r10, r18, r19``; ``2 c3 = 0`` is built into the ring."""
    return [reference(n) for n in ("r9", "r10", "r18", "r19")]


__all__ = ["names", "reference", "ring_n1_ideal", "ring_n2_ideal"]
