"""Write the first M Pulsar sequence terms as an OEIS-style b-file.

    python scripts/write_bfile.py 10000 b_pulsar.txt
"""

import sys

from pulsar import prefix


def main():
    m = int(sys.argv[1]) if len(sys.argv) > 1 else 10000
    path = sys.argv[2] if len(sys.argv) > 2 else "b_pulsar.txt"
    with open(path, "w") as fh:
        for k, x in enumerate(prefix(m), start=1):
            fh.write(f"{k} {x}\n")
    print(f"wrote {m} terms to {path}")


if __name__ == "__main__":
    main()
