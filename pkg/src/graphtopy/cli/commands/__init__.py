"""
CLI 명령어 모듈.

각 모듈은 setup_parser(parser) 와 execute(args, limits) -> int 를 제공합니다.
"""

from . import (
    cayley,
    cofib,
    color,
    covering,
    demo,
    dessin,
    extend,
    gset_weq,
    homcount,
    ihara,
    ramify,
    validate,
    weq,
    zeta,
)

# verb -> (module, help)
COMMANDS = {
    "validate": (validate, "Check a graph or morphism document"),
    "zeta": (zeta, "Zeta series and det(I - tA) of a directed graph"),
    "ihara": (ihara, "Ihara series, det(I - tB) and the Bass identity"),
    "homcount": (homcount, "Count cycles c_p -> X by enumeration and trace"),
    "weq": (weq, "Decide weak equivalence of two graphs"),
    "cofib": (cofib, "Primitive-cycle multiplicities of the cofibrant replacement"),
    "covering": (covering, "Check that a morphism is a covering"),
    "color": (color, "Search an n-coloring (covering to B_n or D_n)"),
    "cayley": (cayley, "Cayley graph of a G-set"),
    "gset-weq": (gset_weq, "Decide weak equivalence of two G-sets"),
    "dessin": (dessin, "Passport or bipartite map of a dessin"),
    "ramify": (ramify, "Ramification profile of a Galoisian complex"),
    "demo": (demo, "Run a scripted counting argument"),
    "extend": (extend, "Extend a cycle of a covering to an R_X^p object"),
}

__all__ = ["COMMANDS"]
