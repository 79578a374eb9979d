"""``ramonoid`` command line: analyze rings, multiply monoids, browse the catalog, verify."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Tuple

from . import catalog, corpus, verify
from .errors import BudgetExceeded, RingDescriptionError
from .ideals import DEFAULT_IDEAL_BUDGET, all_ideals, is_dual_ring, is_semiprime_ring
from .monoid import DEFAULT_BUDGET, MapMonoid, export_abstract, generate_monoid, monoid_report, to_dot
from .pomonoid import OrderedMonoid, odot
from .rings import DEFAULT_RING_BUDGET, build_ring, parse_ring_description

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3


@dataclass
class AnalysisConfig:
    path: Path
    maps: str = "ra"
    json_path: Optional[Path] = None
    dot_path: Optional[Path] = None
    max_elements: int = DEFAULT_RING_BUDGET
    max_ideals: int = DEFAULT_IDEAL_BUDGET
    max_monoid: int = DEFAULT_BUDGET

    def __post_init__(self):
        for nm in ("max_elements", "max_ideals", "max_monoid"):
            if getattr(self, nm) <= 0:
                raise ValueError(f"{nm.replace('_', '-')} must be positive")
        if not self.maps:
            raise ValueError("generator set must be nonempty")


def _err(msg: str) -> None:
    print(f"ramonoid: {msg}", file=sys.stderr)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def analysis_report(cfg: AnalysisConfig) -> Tuple[dict, MapMonoid]:
    desc = parse_ring_description(cfg.path.read_text())
    ring = build_ring(desc, cfg.max_elements)
    lat = all_ideals(ring, cfg.max_ideals)
    m = generate_monoid(lat, cfg.maps, cfg.max_monoid)
    second = "d" if "d" in m.symbols and "a" not in m.symbols else "a"
    holds = lambda u, v: m.relation_holds(u, v)  # noqa: E731
    return {
        "ring": {
            "name": ring.name,
            "size": ring.size,
            "field": ring.is_field(),
            "semiprime": is_semiprime_ring(lat),
            "dual": is_dual_ring(lat),
        },
        "ideals": {
            "count": len(lat),
            "list": [lat.ideal_str(i) for i in range(len(lat))],
            "spectrum": [lat.ideal_str(i) for i in lat.primes],
            "nilradical": lat.ideal_str(lat.nilradical),
        },
        "monoid": monoid_report(m),
        "relations": catalog.relation_table(holds, second) if "r" in m.symbols and second in m.symbols else {},
        "catalog": catalog.classify(export_abstract(m)) if m.symbols == ("r", "a") else {},
    }, m


def cmd_analyze(args) -> int:
    try:
        cfg = AnalysisConfig(
            Path(args.ring), args.maps, args.json and Path(args.json), args.dot and Path(args.dot),
            args.max_elements, args.max_ideals, args.max_monoid,
        )
        report, m = analysis_report(cfg)
    except (OSError, RingDescriptionError, ValueError) as exc:
        _err(f"{args.ring}: {exc}")
        return EXIT_INPUT
    except BudgetExceeded as exc:
        _err(str(exc))
        return EXIT_BUDGET
    if cfg.json_path:
        cfg.json_path.write_text(_dumps(report))
    if cfg.dot_path:
        cfg.dot_path.write_text(to_dot(m))
    mon = report["monoid"]
    print(f"ring      {report['ring']['name']} ({report['ring']['size']} elements)")
    print(f"ideals    {report['ideals']['count']}; spectrum {', '.join(report['ideals']['spectrum'])}")
    print(f"monoid    K={mon['K']} k={mon['ring_k']} generators {''.join(mon['generators'])}")
    print("elements  " + " ".join(e["word"] for e in mon["elements"]))
    cat = report["catalog"]
    if cat:
        iso = ", ".join(cat["isomorphic"]) or "none"
        print(f"catalog   isomorphic to {iso}; collapse of {', '.join(cat['collapse_of']) or 'none'}")
    return EXIT_OK


def _load_monoid(arg: str) -> OrderedMonoid:
    try:
        return catalog.get(arg)
    except KeyError:
        pass
    p = Path(arg)
    if not p.exists():
        raise ValueError(f"{arg}: neither a catalog name nor a file")
    try:
        data = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"{arg}: {exc}") from None
    if not isinstance(data, dict):
        raise ValueError(f"{arg}: malformed monoid document")
    return OrderedMonoid.from_dict(data)


def cmd_odot(args) -> int:
    try:
        ms = [_load_monoid(a) for a in args.monoids]
        if len({m.symbols for m in ms}) != 1:
            raise ValueError("operands use different generator symbols")
        prod = odot(ms, name=" . ".join(m.name or "?" for m in ms))
    except (OSError, ValueError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    except BudgetExceeded as exc:
        _err(str(exc))
        return EXIT_BUDGET
    doc = prod.to_dict()
    if args.json:
        Path(args.json).write_text(_dumps(doc))
    print(f"{prod.name}: {prod.size} elements")
    print("elements  " + " ".join(doc["elements"]))
    print("covers    " + " ".join(f"{a}<{b}" for a, b in prod.hasse_words()))
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.name is None:
        for name, m in catalog.catalog():
            print(f"{name:<14} {m.size:>3} elements  {catalog.entry(name).note}")
        return EXIT_OK
    try:
        e = catalog.entry(args.name)
        m = catalog.get(args.name)
    except KeyError:
        _err(f"unknown catalog entry {args.name!r}; known: {', '.join(catalog.ENTRIES)}, FIELD")
        return EXIT_INPUT
    print(f"{e.name}: {m.size} elements, {e.note}")
    print("relations " + ", ".join(e.relations))
    print("elements  " + " ".join(m.label(i) for i in range(m.size)))
    width = max(len(m.label(i)) for i in range(m.size))
    for i in range(m.size):
        print(f"  {m.label(i):>{width}} | " + " ".join(f"{m.label(int(j)):>{width}}" for j in m.table[i]))
    print("covers    " + " ".join(f"{a}<{b}" for a, b in m.hasse_words()))
    print(m.to_dot(), end="")
    return EXIT_OK


def cmd_verify(args) -> int:
    extra = []
    if args.corpus:
        try:
            extra = corpus.load_directory(Path(args.corpus))
        except (OSError, RingDescriptionError) as exc:
            _err(f"{args.corpus}: {exc}")
            return EXIT_INPUT
    results = verify.run_all(slow=args.slow, extra=extra)
    for r in results:
        print(r.line())
    failed = [r.key for r in results if not r.ok]
    if failed:
        _err("failed: " + ", ".join(failed))
        return EXIT_VERIFY
    return EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ramonoid", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="ideal lattice and monoid of a ring description")
    a.add_argument("ring")
    a.add_argument("--maps", choices=sorted(["ra", "rd", "rad"]), default="ra")
    a.add_argument("--json")
    a.add_argument("--dot")
    a.add_argument("--max-elements", type=_positive, default=DEFAULT_RING_BUDGET)
    a.add_argument("--max-ideals", type=_positive, default=DEFAULT_IDEAL_BUDGET)
    a.add_argument("--max-monoid", type=_positive, default=DEFAULT_BUDGET)
    a.set_defaults(func=cmd_analyze)

    o = sub.add_parser("odot", help="odot product of catalog entries or monoid JSON files")
    o.add_argument("monoids", nargs="+", metavar="NAME|PATH")
    o.add_argument("--json")
    o.set_defaults(func=cmd_odot)

    c = sub.add_parser("catalog", help="list the catalog or dump one entry")
    c.add_argument("name", nargs="?")
    c.set_defaults(func=cmd_catalog)

    v = sub.add_parser("verify", help="run the built-in verification table")
    v.add_argument("--corpus")
    v.add_argument("--slow", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
