import argparse
import functools
import tqdm

import numpy as np

from multiprocessing import Pool

from lexicon import TermTable, save_embeddings, save_term_table


def parse_line(line, dim=None):
    """Without dim the row is all numbers; with dim the leading fields are the term (it may contain spaces)."""
    fields = line.split()
    if dim is None:
        return None, [float(value) for value in fields]
    return " ".join(fields[:-dim]), [float(value) for value in fields[-dim:]]


def main():
    parser = argparse.ArgumentParser(description="Convert whitespace-separated text vectors into LXEMB1")
    parser.add_argument("input", help="One vector per line, in TermId order")
    parser.add_argument("output", help="LXEMB1 file to write")
    parser.add_argument("--terms-output", type=str, default=None, help="Rows start with the term; write the terms file here")
    parser.add_argument("--dim", type=int, default=None, help="Vector width, required with --terms-output")
    parser.add_argument("--workers", type=int, default=8)
    args = parser.parse_args()
    assert args.terms_output is None or args.dim, "--dim is required when rows start with the term"

    with open(args.input, "r", encoding="utf-8") as file:
        lines = [line for line in file if line.strip()]

    dim = args.dim if args.terms_output is not None else None
    with Pool(args.workers) as p:
        rows = list(tqdm.tqdm(p.imap(functools.partial(parse_line, dim=dim), lines, chunksize=1024), total=len(lines)))

    widths = {len(vector) for _, vector in rows}
    if len(widths) > 1:
        raise ValueError(f"{args.input}: rows have different widths {sorted(widths)}")
    if args.dim is not None and widths and widths != {args.dim}:
        raise ValueError(f"{args.input}: rows have {widths.pop()} values, expected {args.dim}")

    save_embeddings(np.asarray([vector for _, vector in rows], dtype=np.float32), args.output)
    if args.terms_output is not None:
        save_term_table(TermTable(tuple(term for term, _ in rows)), args.terms_output)
    print(f"> Wrote {len(rows)} vectors to {args.output}")


if __name__ == "__main__":
    main()
