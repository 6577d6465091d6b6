"""Command line interface: ``wtwm build|query|dump|translate|verify``.

Exit status is 0 on success, 1 for usage errors and 2 for data errors
(empty input, unreadable or corrupt index, out-of-range arguments,
failed verification).
"""

import argparse
import sys

from . import index
from .alphabet import build_c_array, effective_transform
from .translate import Locator, build_wm_via_wt, build_wt_via_wm
from .verify import check_text
from .wavelet_matrix import WaveletMatrix, build_wm
from .wavelet_tree import build_wt

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_symbol(arg):
    """A single character, or ``0xNN`` for an arbitrary byte value."""
    if len(arg) == 1:
        value = ord(arg)
    elif arg.lower().startswith("0x"):
        value = int(arg, 16)
    else:
        raise UsageError(f"symbol must be one character or 0xNN, got {arg!r}")
    if value > 255:
        raise UsageError(f"symbol {arg!r} is not a single byte")
    return value


def format_symbol(byte):
    ch = chr(byte)
    return ch if ch.isprintable() and byte < 128 and not ch.isspace() else f"0x{byte:02x}"


def _read_text(path):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from None
    if not data:
        raise DataError(f"{path} is empty; nothing to index")
    return data


def _load_index(path):
    try:
        return index.load(path)
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from None
    except index.IndexFormatError as exc:
        raise DataError(f"{path}: {exc}") from None


def _code(structure, symbol):
    code = structure.decode_table.find(bytes([symbol]))
    if code < 0:
        raise DataError(f"symbol {format_symbol(symbol)} does not occur in the indexed text")
    return code


def cmd_build(args):
    e = effective_transform(_read_text(args.input))
    c = build_c_array(e)
    if args.structure == "tree":
        structure = build_wt_via_wm(e, c) if args.via_translate else build_wt(e, c)
    else:
        structure = build_wm_via_wt(e, c) if args.via_translate else build_wm(e, c)
    try:
        index.save(structure, args.output)
    except OSError as exc:
        raise DataError(f"cannot write {args.output}: {exc.strerror}") from None
    print(f"{args.structure}: n={e.n} sigma={e.sigma_effective} "
          f"sigma_padded={e.sigma_padded} height={e.height} -> {args.output}")


def _need_int(value, lo, hi, what):
    if not lo <= value <= hi:
        raise DataError(f"{what} {value} out of range [{lo}, {hi}]")


def cmd_query(args):
    s = _load_index(args.index)
    if args.op == "access":
        _need_int(args.pos, 0, s.n - 1, "position")
        print(format_symbol(s.access_symbol(args.pos)))
    elif args.op == "rank":
        code = _code(s, parse_symbol(args.symbol))
        _need_int(args.pos, 0, s.n - 1, "position")
        print(s.rank(code, args.pos))
    else:
        code = _code(s, parse_symbol(args.symbol))
        _need_int(args.k, 1, s.c_array.occ(code), "select rank")
        print(s.select(code, args.k))


def cmd_dump(args):
    s = _load_index(args.index)
    kind = "matrix" if isinstance(s, WaveletMatrix) else "tree"
    print(f"kind={kind} n={s.n} sigma={s.sigma_effective} "
          f"sigma_padded={s.c_array.sigma_padded} height={s.height}")
    print("alphabet: " + " ".join(format_symbol(b) for b in s.decode_table))
    print("C: " + " ".join(map(str, s.c_array.entries)))
    for level, bv in enumerate(s.levels):
        line = f"level {level}: {bv.bits}"
        if kind == "matrix":
            line += f"  z={s.z[level]}"
        print(line)


def cmd_translate(args):
    if args.inverse and args.symbol is None:
        raise UsageError("--inverse needs --symbol: the matrix position alone does not identify its node")
    e = effective_transform(_read_text(args.input))
    loc = Locator.from_text(e)
    _need_int(args.level, 0, e.height - 1, "level")
    _need_int(args.pos, 0, e.n - 1, "position")
    if args.inverse:
        symbol = parse_symbol(args.symbol)
        try:
            code = e.code_of(symbol)
        except KeyError:
            raise DataError(f"symbol {format_symbol(symbol)} does not occur in the text") from None
        try:
            d = loc.explain_f_inv(args.level, args.pos, code)
        except ValueError as exc:
            raise DataError(str(exc)) from None
        print(f"f_inv(level={args.level}, j={args.pos}, symbol={format_symbol(symbol)}) = {d['i']}")
        print(f"  u={d['u']} q={d['q']} delta_u={d['delta_u']} v={d['v']} p={d['p']}")
    else:
        d = loc.explain_f(args.level, args.pos)
        print(f"f(level={args.level}, i={args.pos}) = {d['j']}")
        print(f"  v={d['v']} p={d['p']} delta_v={d['delta_v']} u={d['u']} q={d['q']}")


def cmd_verify(args):
    results = check_text(_read_text(args.input))
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status}  {r.name}" + (f"  ({r.detail})" if r.detail else ""))
    failed = [r for r in results if not r.ok]
    if failed:
        raise DataError(f"{len(failed)} of {len(results)} checks failed; first: {failed[0].detail}")
    print(f"all {len(results)} checks passed")


def make_parser():
    p = _Parser(prog="wtwm", description="Wavelet tree / wavelet matrix indexes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="build an index file from a text file")
    b.add_argument("input")
    b.add_argument("output")
    b.add_argument("--structure", choices=("tree", "matrix"), default="matrix")
    b.add_argument("--via-translate", action="store_true",
                   help="build with the other structure's constructor and translated positions")
    b.set_defaults(func=cmd_build)

    q = sub.add_parser("query", help="answer access/rank/select on an index file")
    q.add_argument("index")
    qs = q.add_subparsers(dest="op", required=True, parser_class=_Parser)
    qa = qs.add_parser("access")
    qa.add_argument("pos", type=int)
    qr = qs.add_parser("rank")
    qr.add_argument("symbol")
    qr.add_argument("pos", type=int)
    qsel = qs.add_parser("select")
    qsel.add_argument("symbol")
    qsel.add_argument("k", type=int)
    q.set_defaults(func=cmd_query)

    d = sub.add_parser("dump", help="print header and level bits of an index file")
    d.add_argument("index")
    d.set_defaults(func=cmd_dump)

    t = sub.add_parser("translate", help="map one position between tree and matrix levels")
    t.add_argument("input")
    t.add_argument("--level", type=int, required=True)
    t.add_argument("--pos", type=int, required=True)
    t.add_argument("--inverse", action="store_true")
    t.add_argument("--symbol")
    t.set_defaults(func=cmd_translate)

    v = sub.add_parser("verify", help="check all constructions and queries against oracles")
    v.add_argument("input")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"wtwm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"wtwm: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
