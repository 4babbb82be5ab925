#!/usr/bin/env python3
"""Writes the offline OEIS fixtures.

The sandbox that produced these files had no route to oeis.org, so every
fixture is rebuilt from the defining recurrence or predicate of the entry and
marked "source": "reconstructed". Replace them with downloaded snapshots
(`digitlang oeis fetch`, online build) when network access is available.
"""
import json
import pathlib

TERMS = 30


def linear(initial, coeffs, n=TERMS):
    """a(m) = sum coeffs[j] * a(m - 1 - j)."""
    a = list(initial)
    while len(a) < n:
        a.append(sum(c * a[-1 - j] for j, c in enumerate(coeffs)))
    return a[:n]


def y_seq(b, k, n=TERMS):
    a = [b**i for i in range(k)]
    while len(a) < n:
        a.append((b - 1) * sum(a[-k:]))
    return a[:n]


def parity_members(parity, n=60):
    out, m = [], 0
    while len(out) < n:
        if bin(m).count("1") % 2 == parity:
            out.append(m)
        m += 1
    return out


ENTRIES = {
    "A072256": ("a(n) = 10*a(n-1) - a(n-2), a(0) = a(1) = 1", 0, linear([1, 1], [10, -1])),
    "A138288": ("expansion of (1-x)/(1-10x+x^2)", 0, linear([1, 9], [10, -1])),
    "A322054": ("decimal strings of length n avoiding a fixed square aa", 0, y_seq(10, 2)),
    "A028859": ("a(n) = 2*a(n-1) + 2*a(n-2), a(0) = 1, a(1) = 3", 0, y_seq(3, 2)),
    "A155020": ("ternary words avoiding a fixed square aa", 0, y_seq(3, 2)),
    "A125145": ("a(n) = 3*a(n-1) + 3*a(n-2), a(0) = 1, a(1) = 4", 0, y_seq(4, 2)),
    "A086347": ("a(n) = 4*a(n-1) + 4*a(n-2), a(0) = 1, a(1) = 5", 0, y_seq(5, 2)),
    "A180033": ("a(n) = 5*a(n-1) + 5*a(n-2), a(0) = 1, a(1) = 6", 0, y_seq(6, 2)),
    "A180167": ("a(n) = 6*a(n-1) + 6*a(n-2), a(0) = 1, a(1) = 7", 0, y_seq(7, 2)),
    "A119826": ("ternary words avoiding a fixed cube aaa", 0, y_seq(3, 3)),
    "A282310": ("quaternary words avoiding a fixed cube aaa", 0, y_seq(4, 3)),
    "A000069": ("odious numbers: odd number of 1's in binary expansion", 1, parity_members(1)),
    "A001969": ("evil numbers: even number of 1's in binary expansion", 1, parity_members(0)),
}


def main():
    here = pathlib.Path(__file__).parent
    for number, (name, offset, terms) in ENTRIES.items():
        doc = {
            "number": number,
            "name": name,
            "offset": offset,
            "data": [str(t) for t in terms],
            "source": "reconstructed",
        }
        (here / f"{number}.json").write_text(json.dumps(doc, indent=1) + "\n")


if __name__ == "__main__":
    main()
