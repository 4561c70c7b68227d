"""Avoidance-index table for the unary patterns with involution.

    python scripts/index_table.py [--max-k 3] [--witness-len 10000]
"""
import argparse
import logging

from thetapat.patterns import parse_pattern
from thetapat.provers import SQUAREFREE_WORD, THM3_WORD, THM4_WORD, index_report

PATTERNS = ["a t(a) a", "t(a) a t(a)", "a a t(a)", "t(a) a a", "t(a) t(a) a", "a t(a) t(a)"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-k", type=int, default=3)
    ap.add_argument("--witness-len", type=int, default=10**4)
    ap.add_argument("--max-var-len", type=int, default=30)
    ap.add_argument("--prover-depth", type=int, default=32)
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO)
    witnesses = [THM3_WORD, THM4_WORD, SQUAREFREE_WORD]
    for text in PATTERNS:
        rows = index_report(
            parse_pattern(text), args.max_k, witnesses, args.prover_depth,
            args.max_var_len, witness_len=args.witness_len,
        )
        print(text)
        for row in rows:
            print(f"  {row}")


if __name__ == "__main__":
    main()
