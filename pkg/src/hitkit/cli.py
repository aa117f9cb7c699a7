"""Command-line front end and the on-disk basis cache.

Commands print deterministic line-based tables on stdout; anything slow
reports progress on stderr only.  Exit codes: 0 success, 2 mathematical
precondition failure, 1 I/O error.

Cache files live under $HITKIT_CACHE (default ./.hitkit-cache), named
k<K>_n<N>_<kind>.txt, written atomically and parsed back bit-exactly.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import action, dual, hitq, lam
from .gf2 import bits_of as _bits
from .poly import mono_from_text, mono_to_text, weight_degree, weight_vector

BASIS_KIND, INV_KIND, DUAL_KIND = "basis", "inv", "dual"


class PreconditionError(Exception):
    """User input violates a mathematical precondition (exit code 2)."""


def cache_root() -> str:
    return os.environ.get("HITKIT_CACHE", ".hitkit-cache")


def cache_path(k: int, n: int, kind: str) -> str:
    return os.path.join(cache_root(), f"k{k}_n{n}_{kind}.txt")


def _atomic_write(path: str, text: str) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path) or ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def serialize_basis(k: int, n: int, admissibles, hit_rank: int) -> str:
    lines = [f"hitkit-basis v1 k={k} n={n} dim={len(admissibles)} order=weightlex"]
    lines.extend(mono_to_text(m) for m in admissibles)
    lines.append(f"#hit-rank {hit_rank}")
    return "\n".join(lines) + "\n"


def parse_basis(text: str):
    lines = text.splitlines()
    head = lines[0].split()
    if head[0] != "hitkit-basis" or head[1] != "v1":
        raise ValueError("not a hitkit-basis file")
    meta = dict(part.split("=") for part in head[2:])
    k, n, dim = int(meta["k"]), int(meta["n"]), int(meta["dim"])
    monos = [mono_from_text(l) for l in lines[1:1 + dim]]
    rank_line = lines[1 + dim]
    if not rank_line.startswith("#hit-rank "):
        raise ValueError("missing hit-rank trailer")
    return k, n, tuple(monos), int(rank_line.split()[1])


def serialize_invariants(k: int, n: int, group: str, classes) -> str:
    lines = [f"hitkit-inv v1 group={group} k={k} n={n} dim={len(classes)}"]
    for monos in classes:
        lines.append(" + ".join(mono_to_text(m) for m in monos))
    return "\n".join(lines) + "\n"


def parse_invariants(text: str):
    lines = text.splitlines()
    head = lines[0].split()
    if head[0] != "hitkit-inv" or head[1] != "v1":
        raise ValueError("not a hitkit-inv file")
    meta = dict(part.split("=") for part in head[2:])
    classes = [tuple(mono_from_text(part) for part in line.split(" + "))
               for line in lines[1:] if line]
    return meta["group"], int(meta["k"]), int(meta["n"]), classes


def serialize_dual(k: int, n: int, elements) -> str:
    """One or more divided elements, blank-line separated."""
    blocks = ["\n".join(dual.element_to_lines(el)) for el in elements]
    return f"hitkit-dual v1 k={k} n={n}\n" + "\n\n".join(blocks) + "\n"


def _load_elements(path: str, k: int, n: int):
    with open(path) as fh:
        lines = fh.read().splitlines()
    if lines and lines[0].startswith("hitkit-dual"):
        head = lines[0].split()
        meta = dict(part.split("=") for part in head[2:])
        if int(meta["k"]) != k or int(meta["n"]) != n:
            raise PreconditionError(
                f"element file is for k={meta['k']} n={meta['n']}")
        lines = lines[1:]
    elements = dual.elements_from_lines(lines)
    for el in elements:
        if any(len(m) != k for m in el):
            raise PreconditionError("element does not have k superscripts")
        if any(sum(m) != n for m in el):
            raise PreconditionError(f"element is not homogeneous of degree {n}")
    return elements


def _basis_from_cache_or_compute(k: int, n: int):
    """(admissibles, hit_rank), read from a warm cache when present."""
    path = cache_path(k, n, BASIS_KIND)
    if os.path.exists(path):
        with open(path) as fh:
            ck, cn, monos, rank = parse_basis(fh.read())
        if (ck, cn) == (k, n):
            return monos, rank, True
    b = hitq.qp_basis(k, n)
    text = serialize_basis(k, n, b.admissibles, b.hit.rank)
    _atomic_write(path, text)
    return b.admissibles, b.hit.rank, False


def cmd_qp(args) -> int:
    k, n = args.k, args.n
    admissibles, rank, _ = _basis_from_cache_or_compute(k, n)
    if args.omega:
        omega = tuple(int(x) for x in args.omega.split())
        if weight_degree(omega) != n:
            raise PreconditionError(
                f"deg(omega)={weight_degree(omega)} does not match n={n}")
        count = sum(1 for m in admissibles if weight_vector(m) == omega)
        if args.json:
            print(json.dumps({"k": k, "n": n, "omega": list(omega), "dim": count}))
        else:
            print(f"dim(omega={' '.join(map(str, omega))})={count}")
        return 0
    per_omega = {}
    for m in admissibles:
        per_omega[weight_vector(m)] = per_omega.get(weight_vector(m), 0) + 1
    if args.json:
        print(json.dumps({
            "k": k, "n": n, "dim": len(admissibles), "hit_rank": rank,
            "weights": [{"omega": list(w), "dim": d}
                        for w, d in sorted(per_omega.items())]}))
    else:
        print(f"dim={len(admissibles)}")
        for w, d in sorted(per_omega.items()):
            print(f"omega {' '.join(map(str, w))}: dim={d}")
    if args.out:
        _atomic_write(args.out, serialize_basis(k, n, admissibles, rank))
    return 0


def cmd_invariants(args) -> int:
    b = hitq.qp_basis(args.k, args.n)
    inv = action.invariants(b, args.group)
    classes = [tuple(b.class_monomials(v)) for v in inv.rows]
    if args.json:
        print(json.dumps({"k": args.k, "n": args.n, "group": args.group,
                          "dim": inv.rank}))
    else:
        print(f"dim={inv.rank}")
    text = serialize_invariants(args.k, args.n, args.group, classes)
    _atomic_write(cache_path(args.k, args.n, INV_KIND), text)
    if args.out:
        _atomic_write(args.out, text)
    return 0


def cmd_kameko(args) -> int:
    k, n = args.k, args.n
    if (n - k) % 2 != 0 or n < k:
        raise PreconditionError(f"Kameko needs n >= k and n = k mod 2 (n={n}, k={k})")
    src = hitq.qp_basis(k, n)
    dst = hitq.qp_basis(k, (n - k) // 2)
    km = hitq.kameko(src, dst)
    if args.kernel:
        dim = km.kernel().rank
        print(json.dumps({"k": k, "n": n, "kernel_dim": dim}) if args.json
              else f"dim={dim}")
    else:
        print(json.dumps({"k": k, "n": n, "rank": km.rank,
                          "surjective": km.surjective}) if args.json
              else f"rank={km.rank} surjective={'yes' if km.surjective else 'no'}")
    return 0


def cmd_annihilated(args) -> int:
    k, n = args.k, args.n
    if args.elements:
        for i, el in enumerate(_load_elements(args.elements, k, n)):
            verdict = "true" if dual.annihilated_check(el) else "false"
            print(f"element {i}: annihilated={verdict}")
        return 0
    basis = dual.annihilated_basis(k, n)
    print(json.dumps({"k": k, "n": n, "dim": basis.rank}) if args.json
          else f"dim={basis.rank}")
    if basis.rank:
        from .hitq import context
        ctx = context(k, n)
        elements = [
            frozenset(ctx.monomials[c] for c in _bits(v)) for v in basis.rows]
        _atomic_write(cache_path(k, n, DUAL_KIND),
                      serialize_dual(k, n, elements))
    return 0


def cmd_transfer(args) -> int:
    k, n = args.k, args.n
    gens = _load_elements(args.elements, k, n)
    for i, g in enumerate(gens):
        if not dual.annihilated_check(g):
            raise PreconditionError(f"generator {i} is not A-annihilated")
    report = lam.transfer_verdict(k, n, gens)
    if args.json:
        print(json.dumps({
            "k": k, "n": n, "coinv": report.coinvariant_dim,
            "ext": report.ext_dim, "rank": report.rank,
            "verdict": report.verdict}))
    else:
        print(report.summary())
    return 0


def _parse_lambda_expr(text: str):
    terms = []
    for part in text.split("+"):
        part = part.strip()
        if part:
            terms.append(tuple(int(x) for x in part.split(",")))
    return frozenset(terms)


def _format_lambda_expr(e) -> str:
    if not e:
        return "0"
    return " + ".join(",".join(map(str, m)) for m in sorted(e))


def cmd_lambda(args) -> int:
    if args.action == "ext":
        if args.s is None or args.t is None:
            raise PreconditionError("lambda ext needs --s and --t")
        report = lam.cohomology(args.s, args.t)
        print(json.dumps({"s": args.s, "t": args.t, "dim": report.dim})
              if args.json else f"dim={report.dim}")
        return 0
    if args.action == "reduce":
        if not args.expr:
            raise PreconditionError("lambda reduce needs --expr")
        e = _parse_lambda_expr(args.expr)
        lengths = {len(m) for m in e}
        if len(lengths) > 1:
            raise PreconditionError("mixed-length lambda expression")
        print(_format_lambda_expr(lam.adem_reduce(e)))
        return 0
    raise PreconditionError(f"unknown lambda action {args.action!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hitkit",
        description="Hit problem, GL_k-invariants and Singer transfer computations over GF(2)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("qp", help="dimension and weight table of (QP_k)_n")
    common(p)
    p.add_argument("--omega", help="weight vector, e.g. '3 1 1 1'")
    p.add_argument("--out", help="write the basis cache file here as well")
    p.set_defaults(func=cmd_qp)

    p = sub.add_parser("invariants", help="Sigma_k or GL_k invariants of (QP_k)_n")
    common(p)
    p.add_argument("--group", choices=["sym", "gl"], default="gl")
    p.add_argument("--out")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("kameko", help="rank or kernel of the Kameko map at (k, n)")
    common(p)
    p.add_argument("--kernel", action="store_true")
    p.set_defaults(func=cmd_kameko)

    p = sub.add_parser("annihilated", help="dim of (D_k)_n, or check elements from a file")
    common(p)
    p.add_argument("--elements")
    p.set_defaults(func=cmd_annihilated)

    p = sub.add_parser("transfer", help="transfer verdict for generators in a file")
    common(p)
    p.add_argument("--elements", required=True)
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("lambda", help="lambda algebra: Ext dims and Adem reduction")
    p.add_argument("action", choices=["ext", "reduce"])
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--expr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lambda)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
