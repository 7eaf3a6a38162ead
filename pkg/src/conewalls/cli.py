"""Command-line front end.

    conewalls <walls|chambers|dirichlet|models|k3walls> --input FILE
              [--output FILE] [--depth K] [--seed S]

Input and output are UTF-8 JSON.  Rationals travel as strings ``"p/q"``.
Exit codes: 0 success, 2 validation error, 3 stabilizer or precondition
failure, 4 internal error.  Errors are reported on stderr as
``{"error": code, "detail": message}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from . import __version__
from .chambers import adjacency, subdivide
from .cones import cone_from_generators
from .errors import ConeWallsError, PreconditionError, StabilizerError
from .groups import (
    FacePairing,
    IsometryGroup,
    PairingEntry,
    chamber_orbits,
    dirichlet_domain,
    find_face_pairings,
    verify_tiling,
)
from .lattice import make_lattice
from .mukai import make_mukai_setup, sigma_walls_meeting_cone, wall_bound
from .walls import WallQuery, walls_meeting_cone

DEFAULT_DEPTH = 8


class InputError(ConeWallsError):
    code = "input"


# --- (de)serialisation ------------------------------------------------------

def _rational(x) -> Fraction:
    if isinstance(x, bool):
        raise InputError(f"expected a number, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad rational {x!r}") from None
    raise InputError(f"expected an integer or a 'p/q' string, got {x!r}")


def _int(x) -> int:
    q = _rational(x)
    if q.denominator != 1:
        raise InputError(f"expected an integer, got {x!r}")
    return int(q)


def _int_vec(v) -> tuple:
    if not isinstance(v, list):
        raise InputError(f"expected a vector, got {v!r}")
    return tuple(_int(a) for a in v)


def _rat_vec(v) -> tuple:
    if not isinstance(v, list):
        raise InputError(f"expected a vector, got {v!r}")
    return tuple(_rational(a) for a in v)


def _int_mat(M) -> tuple:
    if not isinstance(M, list):
        raise InputError(f"expected a matrix, got {M!r}")
    return tuple(_int_vec(r) for r in M)


def _q(x) -> str:
    return str(Fraction(x))


def _vec_out(v) -> list:
    return [int(a) for a in v]


def _need(doc: dict, key: str):
    if key not in doc:
        raise InputError(f"missing field {key!r}")
    return doc[key]


def _lattice(doc):
    return make_lattice(_int_mat(_need(doc, "gram")), _int_vec(_need(doc, "h")))


def _cone(L, doc, key="cone"):
    gens = [_int_vec(g) for g in _need(doc, key)]
    for g in gens:
        if len(g) != L.rank:
            raise InputError(f"generator {list(g)} has wrong length")
    return cone_from_generators(L, gens)


def _wall_list(L, doc, C) -> list:
    """Explicit ``walls`` (vectors or ``{"v": ...}`` records) or enumeration with ``N``."""
    if "walls" in doc:
        out = []
        for w in doc["walls"]:
            v = _int_vec(w["v"] if isinstance(w, dict) else w)
            if len(v) != L.rank:
                raise InputError(f"wall {list(v)} has wrong length")
            out.append(v)
        return out
    N = _int(_need(doc, "N"))
    return [w.v for w in walls_meeting_cone(WallQuery(L, C, N))]


def _depth(doc, args) -> int:
    d = args.depth if args.depth is not None else doc.get("depth", DEFAULT_DEPTH)
    d = _int(d)
    if d < 0:
        raise InputError("depth must be non-negative")
    return d


def _group(L, doc):
    return IsometryGroup(L, [_int_mat(M) for M in doc.get("group", [])])


# --- subcommands ------------------------------------------------------------

def cmd_walls(doc: dict, args) -> dict:
    L = _lattice(doc)
    C = _cone(L, doc)
    N = _int(_need(doc, "N"))
    walls = walls_meeting_cone(WallQuery(L, C, N))
    return {"walls": [{"v": _vec_out(w.v), "square": int(w.square)} for w in walls]}


def cmd_chambers(doc: dict, args) -> dict:
    L = _lattice(doc)
    C = _cone(L, doc)
    walls = _wall_list(L, doc, C)
    chambers = subdivide(C, walls)
    G = adjacency(chambers)
    return {
        "chambers": [
            {
                "id": ch.index,
                "generators": [_vec_out(g) for g in ch.generators],
                "walls_on_boundary": [_vec_out(w) for w in ch.walls_on_boundary],
            }
            for ch in chambers
        ],
        "adjacency": sorted(
            [min(a, b), max(a, b), _vec_out(d["wall"]) if d["wall"] else None]
            for a, b, d in G.edges(data=True)
        ),
    }


def cmd_dirichlet(doc: dict, args) -> dict:
    L = _lattice(doc)
    ambient = _cone(L, doc)
    y = _rat_vec(_need(doc, "y"))
    Gp = _group(L, doc)
    depth = _depth(doc, args)
    D = dirichlet_domain(Gp, ambient, y, depth)
    out = {
        "basepoint": [_q(a) for a in D.basepoint],
        "domain_generators": [_vec_out(g) for g in D.domain.generators],
        "facet_words": [el.name for el in D.contributing_elements],
        "status": D.status,
        "depth": D.depth,
    }
    samples = _int(doc.get("samples", 0))
    if samples > 0:
        seed = args.seed if args.seed is not None else _int(doc.get("seed", 0))
        rep = verify_tiling(D, Gp, samples, depth, seed)
        out["tiling"] = {
            "samples": rep.samples,
            "cover_fraction": _q(rep.cover_fraction),
            "collisions": rep.collisions,
            "seed": seed,
        }
    return out


def cmd_models(doc: dict, args) -> dict:
    L = _lattice(doc)
    C = _cone(L, doc)
    walls = _wall_list(L, doc, C)
    depth = _depth(doc, args)
    Gp = _group(L, doc)
    if "pairing" in doc:
        entries = tuple(
            PairingEntry(_int_vec(_need(e, "facet")), _int_mat(_need(e, "matrix")), (str(e.get("name", f"p{i}")),))
            for i, e in enumerate(doc["pairing"])
        )
        pairing = FacePairing(C, entries)
    else:
        pairing = find_face_pairings(C, Gp, depth)
    chambers = subdivide(C, walls)
    res = chamber_orbits(chambers, pairing, walls, Gp, depth)
    return {
        "classes": res.classes,
        "count": res.count,
        "status": res.status,
        "depth": res.depth,
        "chambers": [[_vec_out(g) for g in ch.generators] for ch in chambers],
    }


def cmd_k3walls(doc: dict, args) -> dict:
    m = _need(doc, "mukai")
    h = m.get("h")
    ms = make_mukai_setup(_int_mat(_need(m, "gram")), _int_vec(_need(m, "v")), _int_vec(h) if h is not None else None)
    C = _cone(ms.perp, doc)
    walls = sigma_walls_meeting_cone(ms, C)
    return {
        "bound": _q(wall_bound(ms)),
        "perp_basis": [_vec_out(b) for b in ms.perp_basis],
        "perp_gram": [_vec_out(r) for r in ms.perp.gram],
        "perp_h": _vec_out(ms.perp.h),
        "walls": [
            {
                "lambda": [_q(a) for a in w.lam],
                "square": _q(w.lam_square),
                "normal": _vec_out(w.wall),
                "lift": _vec_out(w.lift),
                "k": w.k,
            }
            for w in walls
        ],
    }


COMMANDS = {
    "walls": cmd_walls,
    "chambers": cmd_chambers,
    "dirichlet": cmd_dirichlet,
    "models": cmd_models,
    "k3walls": cmd_k3walls,
}


def render(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def run(command: str, doc: dict, args=None) -> dict:
    if not isinstance(doc, dict):
        raise InputError("problem file must be a JSON object")
    args = args or argparse.Namespace(depth=None, seed=None)
    return COMMANDS[command](doc, args)


def _fail(code: str, detail: str, status: int) -> int:
    sys.stderr.write(json.dumps({"error": code, "detail": detail}, sort_keys=True) + "\n")
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="conewalls", description="Walls, chambers and fundamental domains in hyperbolic lattices.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--input", required=True, help="problem file (JSON)")
    p.add_argument("--output", help="result file; stdout when omitted")
    p.add_argument("--depth", type=int, help="word-length bound for group searches")
    p.add_argument("--seed", type=int, help="seed for the sampled tiling check of 'dirichlet'")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with open(args.input, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        return _fail("input", str(e), 2)
    except json.JSONDecodeError as e:
        return _fail("input", f"invalid JSON: {e}", 2)
    try:
        result = run(args.command, doc, args)
    except (StabilizerError, PreconditionError) as e:
        return _fail(e.code, str(e), 3)
    except ConeWallsError as e:
        return _fail(e.code, str(e), 2)
    except (KeyError, TypeError, AttributeError) as e:
        return _fail("input", f"malformed problem file: {e!r}", 2)
    except Exception as e:  # noqa: BLE001
        return _fail("internal", repr(e), 4)
    text = render(result)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
