"""Regenerate the shipped presentation files.

    python -m skein_hecke.build_fixtures [--out DIR] [--only torus_k2 ...]

Each file is the completion of :func:`presentation.defining_relations` under
:func:`presentation.monomial_order`.  The torus with kappa=3 takes a couple of
minutes.
"""

import argparse
import json
import time
from pathlib import Path

from .braids import BraidContext
from .coeff import Ring
from .presentation import defining_relations, dump_presentation, monomial_order
from .rewrite import RewriteSystem, complete, confluence_check

SHIPPED = [("disk", k) for k in range(1, 6)] + \
          [("cylinder", k) for k in range(1, 5)] + \
          [("torus", k) for k in range(1, 4)]

SOURCES = {
    "disk": "Artin braid relations with the skein relation s_i - s_i^-1 = hbar",
    "cylinder": "type-B braid presentation: a_{i+1} = s_i a_i s_i, loops commute, "
                "a_j commutes with s_i for j not in {i, i+1}; skein relation",
    "torus": "surface braid group of the torus minus a marked point with c central: "
             "a_{i+1} = s_i a_i s_i, b_{i+1} = s_i^-1 b_i s_i^-1, "
             "b_1 a_1...a_k = c^2 a_1...a_k b_1, a_1^-1 b_2 a_1 b_2^-1 = s_1^2; skein relation",
}


def build(surface: str, kappa: int, max_len: int | None = None) -> tuple[RewriteSystem, dict]:
    ctx = BraidContext.of(surface, kappa)
    order = monomial_order(ctx)
    if max_len is None:
        max_len = max(6, 2 * kappa)
    rules = complete(defining_relations(ctx), order, Ring.HBAR_C, ctx.alphabet, max_len=max_len)
    R = RewriteSystem(rules, order, Ring.HBAR_C, ctx.alphabet, name=f"{surface}_k{kappa}")
    src = SOURCES[surface] + f"; completed with superpositions up to length {max_len}"
    return R, dump_presentation(R, ctx, src)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path(__file__).with_name("data"))
    ap.add_argument("--only", nargs="*", help="names like torus_k2")
    ap.add_argument("--check-len", type=int, default=8)
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    for surface, kappa in SHIPPED:
        name = f"{surface}_k{kappa}"
        if args.only and name not in args.only:
            continue
        t0 = time.time()
        R, doc = build(surface, kappa)
        report = confluence_check(R, args.check_len)
        if not report.ok:
            raise SystemExit(f"{name}: {len(report.failures)} confluence failures")
        (args.out / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")
        print(f"{name}: {len(R.rules)} rules, {report.checked} ambiguities ok, {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
