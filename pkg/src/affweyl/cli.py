"""Command-line interface.

Subcommands: list-presets, fold, wgroup (length|word|leq|kottwitz), adm,
report, branch, char, selftest.  Exit codes: 0 success, 1 argument parse
error, 2 domain error (printed with its module-local name), 3 internal
invariant violation.

Elements are written ``t[c1,...]*w[i1,...]``: translation class coordinates
(free then torsion) and a word in the finite simple reflections (1-based,
matching the S_aff indices of the origin walls).  Output is deterministic:
identical invocations produce byte-identical output.  JSON documents carry
a schema version field.
"""

import argparse
import json
import sys

from .errors import AffweylError, InternalInvariantError
from . import facets as fc
from . import highest_weight as hw
from .folding import fold as fold_action
from .presets import list_presets, load_action, load_datum, load_group

SCHEMA = "affweyl/1"


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _class_json(cls):
    return {"free": list(cls.free), "torsion": list(cls.torsion)}


def _emit(doc, fmt, table_keys=None):
    """Render a result document: json, tsv (rows only) or plain text."""
    if fmt == "json":
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
        return
    rows = doc.get("rows", [])
    keys = table_keys or (sorted(rows[0]) if rows else [])
    meta = {k: v for k, v in doc.items() if k not in ("rows", "schema")}
    if fmt == "tsv":
        print("\t".join(keys))
        for row in rows:
            print("\t".join(str(row.get(k, "")) for k in keys))
        return
    for k in sorted(meta):
        print(f"{k}: {meta[k]}")
    if rows:
        widths = [max(len(str(k)), max((len(str(r.get(k, ""))) for r in rows),
                                       default=0)) for k in keys]
        print("  ".join(str(k).ljust(w) for k, w in zip(keys, widths)))
        for row in rows:
            print("  ".join(str(row.get(k, "")).ljust(w)
                            for k, w in zip(keys, widths)))


def _parse_ints(text):
    if text is None or text.strip() == "":
        return ()
    return tuple(int(x) for x in text.split(","))


def _class_for_group(group, coords):
    """Absolute cocharacter (rank-many ints) or class coordinates."""
    n = group.datum.rank
    need = group.coinv.free_rank + len(group.coinv.torsion)
    if len(coords) == need:
        return group.class_from_coords(coords)
    if len(coords) == n:
        return group.project_cocharacter(coords)
    raise AffweylError(
        f"mu needs {n} (absolute) or {need} (class) coordinates")


def cmd_list_presets(args):
    rows = [{"name": n, "kind": k, "detail": d} for n, k, d in list_presets()]
    _emit({"schema": SCHEMA, "rows": rows}, args.format,
          ["name", "kind", "detail"])
    return 0


def cmd_fold(args):
    action = load_action(args.preset, args.action)
    fd = fold_action(action)
    rows = []
    for i in range(len(fd.datum.roots)):
        rows.append({
            "root": ",".join(map(str, fd.datum.roots[i])),
            "coroot": ",".join(map(str, fd.datum.coroots[i])),
            "simple": i in fd.datum.simples,
        })
    doc = {
        "schema": SCHEMA,
        "preset": args.preset,
        "action": args.action,
        "rank": fd.datum.rank,
        "torsion": list(fd.component_group),
        "nonreduced": fd.nonreduced,
        "orbit_map": [{"orbit": list(o), "folded_simple": i}
                      for o, i in fd.orbit_map],
        "rows": rows,
    }
    if args.format != "json":
        doc["orbit_map"] = "; ".join(f"{list(o)}->{i}" for o, i in fd.orbit_map)
    _emit(doc, args.format, ["root", "coroot", "simple"])
    return 0


def cmd_wgroup(args):
    group = load_group(args.preset)
    g = group.element_from_string(args.element)
    if args.operation == "length":
        doc = {"schema": SCHEMA, "element": group.element_to_string(g),
               "length": g.length}
    elif args.operation == "word":
        om, letters = g.reduced_word()
        doc = {"schema": SCHEMA, "element": group.element_to_string(g),
               "omega": group.element_to_string(om),
               "letters": list(letters)}
    elif args.operation == "leq":
        other = group.element_from_string(args.other)
        doc = {"schema": SCHEMA, "element": group.element_to_string(g),
               "other": group.element_to_string(other),
               "leq": group.bruhat_leq(g, other)}
    elif args.operation == "kottwitz":
        k = group.kottwitz(g)
        doc = {"schema": SCHEMA, "element": group.element_to_string(g),
               "kottwitz_free": list(k.free), "kottwitz_torsion": list(k.torsion)}
    else:
        raise AffweylError(f"unknown wgroup operation {args.operation!r}")
    _emit(doc, args.format)
    return 0


def cmd_adm(args):
    group = load_group(args.preset)
    letters = _parse_ints(args.facet)
    facet = fc.Facet(group, letters)
    mu = _class_for_group(group, _parse_ints(args.mu))
    adm = fc.admissible_set(group, mu, facet, length_cap=args.cap)
    elements = sorted(adm.elements,
                      key=lambda g: (g.length, group.element_to_string(g)))
    rows = [{"element": group.element_to_string(g), "length": g.length,
             "maximal": g in adm.maxima} for g in elements]
    doc = {
        "schema": SCHEMA,
        "preset": args.preset,
        "facet": list(letters),
        "size": len(adm.elements),
        "n_maxima": len(adm.maxima),
        "length_cap": args.cap,
        "rows": rows,
    }
    if args.format != "json":
        doc["facet"] = ",".join(map(str, letters))
    _emit(doc, args.format, ["element", "length", "maximal"])
    return 0


def cmd_report(args):
    group = load_group(args.preset)
    rows = fc.speciality_report(group, bound=args.bound, length_cap=args.cap)
    out = []
    for r in rows:
        witness = r["parity_witness"]
        out.append({
            "facet": ",".join(map(str, r["facet"])) or "-",
            "special": r["special"],
            "parity": r["parity"],
            "unique_max": r["unique_max"],
            "agree": r["agree"],
            "max_counts": ",".join(map(str, r["component_counts"])),
            "parity_witness": "" if witness is None else
                f"{group.element_to_string(witness[0])}|{group.element_to_string(witness[1])}",
            "nonunique_mu": "" if r["nonunique_mu"] is None else repr(r["nonunique_mu"]),
        })
    doc = {"schema": SCHEMA, "preset": args.preset,
           "bound": rows[0]["bound"] if rows else 0,
           "length_cap": args.cap, "rows": out}
    _emit(doc, args.format,
          ["facet", "special", "parity", "unique_max", "agree", "max_counts",
           "parity_witness", "nonunique_mu"])
    return 0


def cmd_branch(args):
    datum = load_datum(args.preset)
    action = load_action(args.preset, args.action)
    lam = _parse_ints(args.lam)
    if len(lam) != datum.rank:
        raise AffweylError(f"lambda needs {datum.rank} coordinates")
    fd = fold_action(action)
    dec = hw.restrict_to_fixed_group(datum, action, lam, fd)
    rows = []
    for cls, mult in dec:
        ch = hw.character_with_torsion(fd, cls)
        rows.append({"mu_free": ",".join(map(str, cls.free)),
                     "mu_torsion": ",".join(map(str, cls.torsion)),
                     "multiplicity": mult,
                     "dim": ch.dimension()})
    doc = {"schema": SCHEMA, "preset": args.preset, "action": args.action,
           "lambda": ",".join(map(str, lam)),
           "dim_total": hw.weyl_dimension(datum, lam), "rows": rows}
    _emit(doc, args.format, ["mu_free", "mu_torsion", "multiplicity", "dim"])
    return 0


def cmd_char(args):
    datum = load_datum(args.preset)
    action = load_action(args.preset, args.action)
    fd = fold_action(action)
    co = fd.char_coinv
    coords = _parse_ints(args.mu)
    need = co.free_rank + len(co.torsion)
    if len(coords) != need:
        raise AffweylError(f"mu needs {need} coordinates (free then torsion)")
    cls = co.make(coords[:co.free_rank], coords[co.free_rank:])
    ch = hw.character_with_torsion(fd, cls)
    rows = [{"weight_free": ",".join(map(str, w.free)),
             "weight_torsion": ",".join(map(str, w.torsion)),
             "multiplicity": m} for w, m in ch.items()]
    doc = {"schema": SCHEMA, "preset": args.preset, "action": args.action,
           "mu": ",".join(map(str, coords)), "dim": ch.dimension(),
           "rows": rows}
    _emit(doc, args.format, ["weight_free", "weight_torsion", "multiplicity"])
    return 0


def cmd_selftest(args):
    from .selftest import run_selftest
    return run_selftest(verbose=True)


def build_parser():
    p = _ArgumentParser(prog="affweyl", description=__doc__,
                        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def addfmt(sp):
        sp.add_argument("--format", choices=["text", "tsv", "json"],
                        default="text")

    sp = sub.add_parser("list-presets", help="catalog of shipped presets")
    addfmt(sp)
    sp.set_defaults(func=cmd_list_presets)

    sp = sub.add_parser("fold", help="folded root datum of a pinned action")
    sp.add_argument("--preset", required=True)
    sp.add_argument("--action", required=True)
    addfmt(sp)
    sp.set_defaults(func=cmd_fold)

    sp = sub.add_parser("wgroup", help="Iwahori-Weyl group operations")
    sp.add_argument("operation", choices=["length", "word", "leq", "kottwitz"])
    sp.add_argument("--preset", required=True)
    sp.add_argument("--element", required=True)
    sp.add_argument("--other", help="second element for leq")
    addfmt(sp)
    sp.set_defaults(func=cmd_wgroup)

    sp = sub.add_parser("adm", help="admissible set relative to a facet")
    sp.add_argument("--preset", required=True)
    sp.add_argument("--facet", default="", help="comma-separated S_aff indices")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--cap", type=int, default=64)
    addfmt(sp)
    sp.set_defaults(func=cmd_adm)

    sp = sub.add_parser("report", help="facet table of speciality criteria")
    sp.add_argument("--preset", required=True)
    sp.add_argument("--bound", type=int, default=None)
    sp.add_argument("--cap", type=int, default=64)
    addfmt(sp)
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("branch", help="restriction to the fixed-point group")
    sp.add_argument("--preset", required=True)
    sp.add_argument("--action", required=True)
    sp.add_argument("--lambda", dest="lam", required=True)
    addfmt(sp)
    sp.set_defaults(func=cmd_branch)

    sp = sub.add_parser("char", help="weight multiset of an irreducible")
    sp.add_argument("--preset", required=True)
    sp.add_argument("--action", default=None)
    sp.add_argument("--mu", required=True)
    addfmt(sp)
    sp.set_defaults(func=cmd_char)

    sp = sub.add_parser("selftest", help="run the invariant battery")
    addfmt(sp)
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 1 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except AffweylError as e:
        print(f"error[{e.name}]: {e}", file=sys.stderr)
        return 2
    except InternalInvariantError as e:
        print(f"internal invariant violation: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
