"""Batch front door.

Subcommands map one-to-one onto library operations and emit either plain
text or the JSON schemas of the library types. Output is byte-deterministic
for a fixed build and input; exit codes: 0 success or PASS, 1 a verification
failed or a claimed witness does not exist, 2 usage error, 3 term budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .cones import cone_generator_decomposition, cone_membership
from .elements import LRElement
from .errors import (
    BudgetExceeded,
    HypothesisFails,
    IndexOutOfRange,
    InvalidPartition,
    LRLabError,
    NoDecomposition,
    NotComparable,
    NotFoundWithin,
    UnknownLemma,
    UnsupportedLength,
)
from .partitions import Partition, dominance_compare, interpolating_sequence
from .powercache import MAGIC, PowerCache
from .product import mul, tensor_power
from .reports import VerificationReport
from .search import minimal_uniform_exponent, transfer_witness
from .subdivisions import Subdivision, all_subdivisions, perturbed_generator, perturbed_generator_raw, cone_generator
from .verify import LEMMA_IDS, verify_all, verify_lemma

_PARTITION_RE = re.compile(r"^\[(\d+(,\d+)*)?\]$")


class UsageError(LRLabError):
    pass


def parse_partition(text: str) -> Partition:
    """Bracketed comma-separated decimal parts, e.g. [4,2,1] or []."""
    if not _PARTITION_RE.match(text):
        raise UsageError(f"bad partition literal {text!r}; expected like [4,2,1] or []")
    inner = text[1:-1]
    try:
        return Partition(int(p) for p in inner.split(",")) if inner else Partition()
    except InvalidPartition as exc:
        raise UsageError(str(exc)) from exc


def _emit(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def _emit_json(obj) -> None:
    _emit(json.dumps(obj))


def _element_text(elem: LRElement) -> list[str]:
    rows = [f"{p} {m}" for p, m in elem.items()]
    return rows if rows else ["empty"]


def _bounds_from_args(args) -> dict[str, int]:
    out = {}
    for flag, key in (
        ("max_weight", "max_weight"),
        ("max_l", "max_l"),
        ("max_k", "max_k"),
        ("max_weight_p", "max_weight_p"),
        ("max_shift", "max_shift"),
    ):
        v = getattr(args, flag, None)
        if v is not None:
            out[key] = v
    return out


def _cmd_mul(args) -> int:
    prod = mul(parse_partition(args.a), parse_partition(args.b), cap=args.l)
    if args.json:
        _emit_json(prod.to_json())
    else:
        for row in _element_text(prod):
            _emit(row)
    return 0


def _cmd_power(args) -> int:
    cache = PowerCache(args.cache) if args.cache else None
    power = tensor_power(parse_partition(args.a), args.n, cap=args.l, cache=cache)
    if cache is not None:
        cache.save()
    if args.json:
        _emit_json(power.to_json())
    else:
        for row in _element_text(power):
            _emit(row)
    return 0


def _cmd_dominance(args) -> int:
    rel = dominance_compare(parse_partition(args.a), parse_partition(args.b))
    if args.json:
        _emit_json({"relation": rel.value})
    else:
        _emit(rel.value)
    return 0


def _cmd_interpolate(args) -> int:
    seq = interpolating_sequence(parse_partition(args.a), parse_partition(args.b))
    if args.json:
        _emit_json({"sequence": [list(p.parts) for p in seq]})
    else:
        for p in seq:
            _emit(str(p))
    return 0


def _cmd_gj(args) -> int:
    a = parse_partition(args.a)
    l = args.l
    if args.mask is not None:
        subs = [Subdivision.from_mask(l, args.mask)]
    else:
        subs = list(all_subdivisions(l))
    rows = [(j, cone_generator(a, j)) for j in subs]
    if args.json:
        _emit_json(
            {
                "partition": list(a.parts),
                "l": l,
                "generators": [
                    {"subdivision": [list(iv) for iv in j.intervals], "generator": list(g.parts)}
                    for j, g in rows
                ],
            }
        )
    else:
        for j, g in rows:
            _emit(f"J={j} G={g}")
    return 0


def _cmd_hj(args) -> int:
    a = parse_partition(args.a)
    j = Subdivision.from_mask(args.l, args.mask)
    if args.m is not None or args.n is not None:
        if args.m is None or args.n is None or args.beta is not None or args.delta is not None:
            raise UsageError("give either --beta and --delta, or --m and --n")
        m, n = args.m, args.n
        h = perturbed_generator_raw(a, j, m, n)
    else:
        if args.beta is None or args.delta is None:
            raise UsageError("give either --beta and --delta, or --m and --n")
        try:
            m, n, h = perturbed_generator(a, j, args.beta, args.delta)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if args.json:
        _emit_json({"m": m, "n": n, "partition": None if h is None else list(h.parts)})
    else:
        _emit(f"m={m} n={n} H={'not-a-partition' if h is None else h}")
    return 0


def _report_lines(rep: VerificationReport) -> list[str]:
    head = f"{rep.lemma_id}: {rep.status} (cases={rep.cases_checked}, failures={len(rep.failures)})"
    return [head] + [f"  {json.dumps(f)}" for f in rep.failures]


def _cmd_verify(args) -> int:
    bounds = _bounds_from_args(args)
    if args.all:
        reports = verify_all(bounds or None, threads=args.threads)
    elif args.lemma:
        reports = [verify_lemma(args.lemma, bounds or None, threads=args.threads)]
    else:
        raise UsageError("verify needs --lemma ID or --all")
    if args.json:
        if len(reports) == 1:
            _emit_json(reports[0].to_json())
        else:
            _emit_json({"reports": [r.to_json() for r in reports]})
    else:
        for rep in reports:
            for line in _report_lines(rep):
                _emit(line)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_nsearch(args) -> int:
    res = minimal_uniform_exponent(parse_partition(args.a), args.l, args.nmax)
    if args.json:
        _emit_json(res.to_json())
    else:
        _emit(res.describe())
    return 0


def _cmd_cone(args) -> int:
    b = parse_partition(args.b)
    a = parse_partition(args.a)
    cert = cone_membership(b, a, args.l)
    if cert.member and not args.member_only:
        cert = cone_generator_decomposition(b, a, args.l)
    if args.json:
        _emit_json(cert.to_json())
        return 0
    if not cert.member:
        _emit(f"not a member: {cert.reason}")
        return 0
    _emit(f"member n={cert.n}")
    if cert.decomposition is not None:
        body = " + ".join(f"{j}*{q}" for j, q in cert.decomposition) or "0"
        _emit(f"decomposition: {body}")
    return 0


def _cmd_transfer(args) -> int:
    wit = transfer_witness(
        parse_partition(args.a), parse_partition(args.b), args.d, t_max=args.tmax
    )
    if args.json:
        _emit_json(wit.to_json())
    else:
        sb, sa = wit.checked_support_sizes
        _emit(f"t={wit.t} M={wit.m_exp} N={wit.n_exp} supports {sb} <= {sa}")
    return 0


def _cmd_cache(args) -> int:
    cache = PowerCache(args.path)
    if args.json:
        _emit_json(
            {
                "path": args.path,
                "version": MAGIC,
                "valid": cache.valid_header,
                "entries": len(cache),
            }
        )
    else:
        state = "valid" if cache.valid_header else "invalid (rewritten on next save)"
        _emit(f"{MAGIC} cache {state}: entries={len(cache)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument(
        "--threads", type=int, default=1, help="worker threads (output does not depend on it)"
    )

    parser = argparse.ArgumentParser(
        prog="lrlab", description="Exact partition-product engine and verification suites"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mul", parents=[common], help="product of two partitions")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--l", type=int, default=None, help="length cap (quotient ring)")
    p.set_defaults(func=_cmd_mul)

    p = sub.add_parser("power", parents=[common], help="tensor power of a partition")
    p.add_argument("a")
    p.add_argument("n", type=int)
    p.add_argument("--l", type=int, default=None, help="length cap (quotient ring)")
    p.add_argument("--cache", default=None, help="path of an on-disk power cache")
    p.set_defaults(func=_cmd_power)

    p = sub.add_parser("dominance", parents=[common], help="compare two partitions")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_dominance)

    p = sub.add_parser("interpolate", parents=[common], help="one-cell chain between comparable partitions")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_interpolate)

    p = sub.add_parser("gj", parents=[common], help="block-constant cone generators")
    p.add_argument("a")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--mask", type=int, default=None, help="breakpoint bitmask of one subdivision")
    p.set_defaults(func=_cmd_gj)

    p = sub.add_parser("hj", parents=[common], help="cone generator with one cell moved")
    p.add_argument("a")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--mask", type=int, required=True, help="breakpoint bitmask of the subdivision")
    p.add_argument("--beta", type=int, default=None, help="column whose height picks the source block")
    p.add_argument("--delta", type=int, default=None, help="column whose height picks the target block")
    p.add_argument("--m", type=int, default=None, help="raw source block index")
    p.add_argument("--n", type=int, default=None, help="raw target block index")
    p.set_defaults(func=_cmd_hj)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--lemma", choices=list(LEMMA_IDS), default=None)
    p.add_argument("--all", action="store_true", help="run every suite")
    p.add_argument("--max-weight", dest="max_weight", type=int, default=None)
    p.add_argument("--max-l", dest="max_l", type=int, default=None)
    p.add_argument("--max-k", dest="max_k", type=int, default=None)
    p.add_argument("--max-weight-p", dest="max_weight_p", type=int, default=None)
    p.add_argument("--max-shift", dest="max_shift", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("nsearch", parents=[common], help="uniform exponent threshold over a window")
    p.add_argument("a")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(func=_cmd_nsearch)

    p = sub.add_parser("cone", parents=[common], help="cone membership and generator decomposition")
    p.add_argument("b", help="candidate member")
    p.add_argument("a", help="partition whose multiples bound the cone")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--member-only", action="store_true", help="skip the decomposition search")
    p.set_defaults(func=_cmd_cone)

    p = sub.add_parser("transfer", parents=[common], help="support containment witness between powers")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--d", type=int, required=True, help="length cap (rank)")
    p.add_argument("--tmax", type=int, default=8)
    p.set_defaults(func=_cmd_transfer)

    p = sub.add_parser("cache", parents=[common], help="inspect an on-disk power cache")
    p.add_argument("path")
    p.set_defaults(func=_cmd_cache)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (NoDecomposition, NotFoundWithin) as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return 1
    except (
        UsageError,
        InvalidPartition,
        NotComparable,
        IndexOutOfRange,
        UnknownLemma,
        HypothesisFails,
        UnsupportedLength,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
