"""Command-line front end.

Reads a byte or token text, picks an equivalence relation, and emits any
subset of {border, scover, lcover, covers, lseeds} as TSV or JSON. With
--stream, one row per prefix is emitted as positions arrive (identity and
parameterized only; the order-isomorphism border builder is not online).

Exit codes: 0 success, 1 I/O error, 2 malformed input or bad request.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import border as border_mod
from . import covers as covers_mod
from . import oracle as oracle_mod
from .scer import ScerKind, TokenSeq

ARRAY_NAMES = ("border", "scover", "lcover", "covers", "lseeds")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="quasicover",
        description="Quasiperiodicity arrays (border, shortest/longest cover, covers, left seeds) "
        "of a text under identity, parameterized, or order-isomorphic equivalence.",
    )
    p.add_argument("input", nargs="?", default="-", help="input file, or - for stdin (default)")
    p.add_argument("--scer", choices=[k.value for k in ScerKind], default="identity",
                   help="equivalence relation (default: identity)")
    p.add_argument("--arrays", default="border,scover,lcover",
                   help="comma-separated subset of " + ",".join(ARRAY_NAMES))
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.add_argument("--input-mode", choices=["bytes", "tokens"], default="bytes",
                   help="bytes: each byte is a token; tokens: whitespace-separated integers")
    p.add_argument("--border-file", default=None,
                   help="use a precomputed border array (one integer per line) instead of the text")
    p.add_argument("--oracle", action="store_true",
                   help="compute everything with the brute-force reference implementations")
    p.add_argument("--stream", action="store_true",
                   help="emit one row per prefix as positions arrive")
    return p


def _read_input(path: str, mode: str) -> TokenSeq:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    if mode == "bytes":
        if data.endswith(b"\n"):
            data = data[:-1]
        return TokenSeq.from_bytes(data)
    try:
        return TokenSeq(int(tok) for tok in data.split())
    except ValueError as e:
        raise ValueError(f"bad token input: {e}") from None


def _compute_batch(text: TokenSeq, kind: ScerKind, arrays: list[str],
                   border: list[int] | None, use_oracle: bool) -> dict[str, list[int]]:
    n = len(border) if border is not None else len(text)
    if use_oracle:
        out: dict[str, list[int]] = {}
        if "border" in arrays:
            out["border"] = oracle_mod.brute_border_array(text, kind)
        if "scover" in arrays:
            out["scover"] = oracle_mod.brute_scover(text, kind)
        if "lcover" in arrays:
            out["lcover"] = oracle_mod.brute_lcover(text, kind)
        if "covers" in arrays:
            out["covers"] = sorted(oracle_mod.brute_cover_set(text, kind)) if n else []
        if "lseeds" in arrays:
            out["lseeds"] = oracle_mod.brute_left_seeds(text, kind, n) if n else []
        return out

    if border is None:
        border = border_mod.border_array(text, kind)
    out = {}
    if "border" in arrays:
        out["border"] = list(border)
    if "scover" in arrays:
        out["scover"] = list(covers_mod.shortest_cover_array(border).scover)
    if any(a in arrays for a in ("lcover", "covers", "lseeds")):
        lca = covers_mod.longest_cover_array(border)
        if "lcover" in arrays:
            out["lcover"] = list(lca.lcover)
        if "covers" in arrays:
            out["covers"] = covers_mod.all_cover_lengths(lca, n) if n else []
        if "lseeds" in arrays:
            out["lseeds"] = covers_mod.left_seed_lengths(border, lca, n) if n else []
    return out


def _emit_batch(result: dict[str, list[int]], arrays: list[str], fmt: str,
                n: int, scer: str, out) -> None:
    if fmt == "json":
        payload = {"n": n, "scer": scer}
        payload.update({name: result[name] for name in arrays})
        json.dump(payload, out)
        out.write("\n")
        return
    out.write("\t".join(["i"] + [str(i) for i in range(1, n + 1)]) + "\n")
    for name in arrays:
        out.write("\t".join([name] + [str(v) for v in result[name]]) + "\n")


def _stream(text: TokenSeq, kind: ScerKind, arrays: list[str], fmt: str, out) -> None:
    builder = border_mod.BorderBuilder(kind)
    sc = covers_mod.ShortestCoverBuilder()
    lc = covers_mod.LongestCoverBuilder()
    border_values: list[int] = []
    if fmt == "tsv":
        out.write("i\t" + "\t".join(arrays) + "\n")
    for i, token in enumerate(text, start=1):
        b = builder.push(token)
        border_values.append(b)
        sc.push(b)
        lc.push(b)
        row: dict[str, object] = {"i": i}
        if "border" in arrays:
            row["border"] = b
        if "scover" in arrays:
            row["scover"] = sc.scover[-1]
        if "lcover" in arrays:
            row["lcover"] = lc.lcover[-1]
        if "covers" in arrays or "lseeds" in arrays:
            lca = covers_mod.LongestCoverArray(
                lcover=tuple(lc.lcover[1:]),
                ls_children=tuple(lc.ls_children),
                longest_ls_anc=tuple(lc.longest_ls_anc),
            )
            if "covers" in arrays:
                row["covers"] = covers_mod.all_cover_lengths(lca, i)
            if "lseeds" in arrays:
                row["lseeds"] = covers_mod.left_seed_lengths(border_values, lca, i)
        if fmt == "json":
            json.dump(row, out)
            out.write("\n")
        else:
            cells = [str(row["i"])]
            for name in arrays:
                v = row[name]
                cells.append(",".join(str(x) for x in v) if isinstance(v, list) else str(v))
            out.write("\t".join(cells) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    arrays = [a.strip() for a in args.arrays.split(",") if a.strip()]
    if not arrays or any(a not in ARRAY_NAMES for a in arrays):
        print(f"error: --arrays must be a non-empty subset of {','.join(ARRAY_NAMES)}",
              file=sys.stderr)
        return 2
    kind = ScerKind.parse(args.scer)

    if args.stream and kind is ScerKind.ORDER_ISO:
        print("error: --stream is not supported for order-isomorphism "
              "(its border builder is not online)", file=sys.stderr)
        return 2
    if args.stream and (args.oracle or args.border_file):
        print("error: --stream cannot be combined with --oracle or --border-file",
              file=sys.stderr)
        return 2
    if args.oracle and args.border_file:
        print("error: --oracle recomputes from the text; drop --border-file", file=sys.stderr)
        return 2

    border = None
    if args.border_file is not None:
        try:
            border = border_mod.read_border_file(args.border_file)
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return 1
        except ValueError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2

    text = TokenSeq()
    if border is None:
        try:
            text = _read_input(args.input, args.input_mode)
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return 1
        except ValueError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2

    try:
        if args.stream:
            _stream(text, kind, arrays, args.format, sys.stdout)
        else:
            result = _compute_batch(text, kind, arrays, border, args.oracle)
            n = len(border) if border is not None else len(text)
            _emit_batch(result, arrays, args.format, n, kind.value, sys.stdout)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
