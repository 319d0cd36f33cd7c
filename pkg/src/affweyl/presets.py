"""Preset catalog: based root data, pinned actions and wall tables.

Data files live in ``affweyl/data`` (additional search directories can be
prepended through the ``AFFWEYL_PRESET_PATH`` environment variable, separated
by ``os.pathsep``).

``<name>.datum`` describes a based root datum, one root per line::

    name a2-sc
    lattice simply-connected
    rank 2
    simples 0 1
    root  2 -1 | coroot 1 0
    ...
    action swap | perm 1 0
    action foo  | matrix -1 0 ; 0 -1

Actions are either permutations of the simple slots (extended linearly to
the lattice, which requires the simple roots to span) or explicit
character-side matrices (rows separated by ``;``).

``<name>.group`` describes an Iwahori-Weyl group over a base datum::

    name folded-a3
    base a3-sc
    action swap
    wall 1 -1 | 1/2
    ...

Each ``wall`` line gives a relative root direction (a covector on the free
quotient of the cocharacter coinvariants) and its level-set stride.  Split
groups need no ``.group`` file: every datum name doubles as a split preset
with the trivial action and stride 1 on every root.
"""

import os
from fractions import Fraction
from pathlib import Path

from .errors import UnknownPresetError, FoldingError
from .folding import PinnedAction, trivial_action
from .iwahori import IwahoriWeylGroup
from .linalg import solve_rational
from .root_data import BasedRootDatum

DATA_DIR = Path(__file__).parent / "data"
ENV_VAR = "AFFWEYL_PRESET_PATH"


def _search_dirs():
    dirs = []
    extra = os.environ.get(ENV_VAR)
    if extra:
        for part in extra.split(os.pathsep):
            if part:
                dirs.append(Path(part))
    dirs.append(DATA_DIR)
    return dirs


def _find_file(name, suffix):
    for d in _search_dirs():
        p = d / f"{name}{suffix}"
        if p.is_file():
            return p
    return None


def _clean_lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def _parse_datum_file(path):
    rank = None
    simples = ()
    roots = []
    coroots = []
    actions = {}
    name = path.stem
    for line in _clean_lines(path.read_text()):
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "name":
            name = rest
        elif head == "lattice":
            pass
        elif head == "rank":
            rank = int(rest)
        elif head == "simples":
            simples = tuple(int(x) for x in rest.split())
        elif head == "root":
            left, _, right = rest.partition("|")
            rvec = tuple(int(x) for x in left.split())
            rkw = right.strip().split()
            if not rkw or rkw[0] != "coroot":
                raise UnknownPresetError(f"{path}: root line without coroot")
            cvec = tuple(int(x) for x in rkw[1:])
            roots.append(rvec)
            coroots.append(cvec)
        elif head == "action":
            aname, _, decl = rest.partition("|")
            actions[aname.strip()] = decl.strip()
        else:
            raise UnknownPresetError(f"{path}: unknown directive {head!r}")
    if rank is None:
        raise UnknownPresetError(f"{path}: missing rank")
    datum = BasedRootDatum(rank, tuple(roots), tuple(coroots), simples, name=name)
    return datum, actions


def _action_matrix(datum, decl):
    parts = decl.split()
    if parts[0] == "matrix":
        body = " ".join(parts[1:])
        rows = [tuple(int(x) for x in r.split()) for r in body.split(";")]
        return tuple(rows)
    if parts[0] == "perm":
        perm = [int(x) for x in parts[1:]]
        if sorted(perm) != list(range(len(datum.simples))):
            raise FoldingError("action permutation is not a permutation")
        # linear extension: need the simple roots to span the lattice
        srcs = [datum.roots[i] for i in datum.simples]
        imgs = [datum.roots[datum.simples[perm[k]]] for k in range(len(perm))]
        cols = []
        for k in range(datum.rank):
            e = tuple(1 if i == k else 0 for i in range(datum.rank))
            sol = solve_rational([list(v) for v in zip(*srcs)], e)
            if sol is None:
                raise FoldingError(
                    "permutation action needs the simple roots to span; "
                    "declare a matrix instead")
            img = [0] * datum.rank
            for c, v in zip(sol, imgs):
                img = [a + c * b for a, b in zip(img, v)]
            if any(Fraction(x).denominator != 1 for x in img):
                raise FoldingError("permutation action is not integral on the lattice")
            cols.append(tuple(int(x) for x in img))
        return tuple(tuple(cols[j][i] for j in range(datum.rank))
                     for i in range(datum.rank))
    raise UnknownPresetError(f"unknown action declaration {decl!r}")


def _parse_group_file(path):
    name = path.stem
    base = None
    action = None
    walls = []
    for line in _clean_lines(path.read_text()):
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "name":
            name = rest
        elif head == "base":
            base = rest
        elif head == "action":
            action = rest
        elif head == "wall":
            left, _, right = rest.partition("|")
            cov = tuple(int(x) for x in left.split())
            walls.append((cov, Fraction(right.strip())))
        else:
            raise UnknownPresetError(f"{path}: unknown directive {head!r}")
    if base is None:
        raise UnknownPresetError(f"{path}: missing base datum")
    return name, base, action, walls


def load_datum(name):
    path = _find_file(name, ".datum")
    if path is None:
        raise UnknownPresetError(f"unknown datum preset {name!r}")
    datum, _ = _parse_datum_file(path)
    return datum


def load_action(datum_name, action_name):
    if action_name in (None, "", "trivial"):
        return trivial_action(load_datum(datum_name))
    path = _find_file(datum_name, ".datum")
    if path is None:
        raise UnknownPresetError(f"unknown datum preset {datum_name!r}")
    datum, actions = _parse_datum_file(path)
    if action_name not in actions:
        raise UnknownPresetError(
            f"datum {datum_name!r} has no action {action_name!r}")
    mat = _action_matrix(datum, actions[action_name])
    return PinnedAction(datum, (mat,), name=action_name)


def load_group(name):
    """Iwahori-Weyl group preset: a .group manifest or a split datum name."""
    path = _find_file(name, ".group")
    if path is not None:
        gname, base, action_name, walls = _parse_group_file(path)
        action = load_action(base, action_name)
        return IwahoriWeylGroup(action, wall_table=walls or None, name=gname)
    datum = load_datum(name)
    return IwahoriWeylGroup(trivial_action(datum), name=name)


def list_presets():
    """Catalog rows: (name, kind, detail)."""
    rows = []
    seen = set()
    for d in _search_dirs():
        if not d.is_dir():
            continue
        for p in sorted(d.iterdir()):
            if p.suffix == ".datum" and p.stem not in seen:
                seen.add(p.stem)
                datum, actions = _parse_datum_file(p)
                detail = f"rank {datum.rank}, {len(datum.roots)} roots"
                if actions:
                    detail += ", actions: " + ",".join(sorted(actions))
                rows.append((p.stem, "split", detail))
            elif p.suffix == ".group" and p.stem not in seen:
                seen.add(p.stem)
                gname, base, action_name, walls = _parse_group_file(p)
                rows.append((p.stem, "folded",
                             f"base {base}, action {action_name}, {len(walls)} walls"))
    rows.sort()
    return rows
