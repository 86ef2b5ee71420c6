#!/usr/bin/env python3
"""Reference external-solver adapter for the LP files this project emits.

Usage: lp_solve_scipy.py MODEL.lp OUTPUT.sol [TIME_LIMIT_SECONDS]

Reads the LP file, solves it as a mixed-integer program with
scipy.optimize.milp (HiGHS) and writes one "name value" line per variable.
Exit codes follow the external-backend contract: 0 optimal, 10 infeasible,
20 time limit, anything else is an error.
"""

import sys

import numpy as np
from scipy import sparse
from scipy.optimize import Bounds, LinearConstraint, milp

SECTION_WORDS = {
    "minimize": "objective",
    "min": "objective",
    "subject": "constraints",
    "st": "constraints",
    "s.t.": "constraints",
    "bounds": "bounds",
    "binaries": "binaries",
    "binary": "binaries",
    "bin": "binaries",
    "generals": "generals",
    "general": "generals",
    "gen": "generals",
    "end": "end",
}


def is_number(tok):
    body = tok[1:] if tok[0] in "+-" else tok
    return body.isdigit()


def content_lines(path):
    with open(path) as fh:
        for raw in fh:
            line = raw.split("\\")[0]
            if line.strip():
                yield line


def parse_lp(path):
    objective = []  # (name, coef)
    rows = []       # [terms, sense, rhs]
    bounds = {}     # name -> [lb, ub]; None means free in that direction
    binaries = set()
    generals = set()

    section = None
    terms = None
    in_objective = False
    coef = 1
    sense = None

    for line in content_lines(path):
        toks = line.split()
        head = toks[0].lower()
        if head in SECTION_WORDS:
            section = SECTION_WORDS[head]
            continue

        if section == "bounds":
            if len(toks) == 2 and toks[1].lower() == "free":
                bounds[toks[0]] = [None, None]
            elif len(toks) == 3 and toks[1] == "=":
                bounds[toks[0]] = [int(toks[2]), int(toks[2])]
            elif len(toks) == 3 and toks[1] == ">=":
                bounds.setdefault(toks[0], [0, None])[0] = int(toks[2])
            elif len(toks) == 3 and toks[1] == "<=":
                bounds.setdefault(toks[0], [0, None])[1] = int(toks[2])
            elif len(toks) == 5 and toks[1] == "<=" and toks[3] == "<=":
                bounds[toks[2]] = [int(toks[0]), int(toks[4])]
            else:
                raise ValueError("unsupported bounds line: %r" % line)
            continue
        if section == "binaries":
            binaries.update(toks)
            continue
        if section == "generals":
            generals.update(toks)
            continue
        if section not in ("objective", "constraints"):
            raise ValueError("content before a section keyword: %r" % line)

        for tok in toks:
            if tok.endswith(":"):
                if section == "objective":
                    in_objective = True
                    terms = objective
                else:
                    in_objective = False
                    rows.append([[], None, None])
                    terms = rows[-1][0]
                coef = 1
                sense = None
            elif tok in ("<=", "<"):
                sense = "<="
            elif tok in (">=", ">"):
                sense = ">="
            elif tok == "=":
                sense = "="
            elif tok == "+":
                pass
            elif tok == "-":
                coef = -coef
            elif is_number(tok):
                if sense is not None:
                    if in_objective:
                        raise ValueError("objective cannot carry a relation")
                    rows[-1][1] = sense
                    rows[-1][2] = coef * int(tok)
                    sense = None
                    coef = 1
                else:
                    coef *= int(tok)
            else:
                terms.append((tok, coef))
                coef = 1

    return objective, rows, bounds, binaries, generals


def main():
    if len(sys.argv) < 3:
        print(__doc__, file=sys.stderr)
        return 1
    lp_path, sol_path = sys.argv[1], sys.argv[2]
    time_limit = float(sys.argv[3]) if len(sys.argv) > 3 else None

    objective, rows, bounds, binaries, generals = parse_lp(lp_path)

    names = []
    index = {}

    def intern(name):
        if name not in index:
            index[name] = len(names)
            names.append(name)
        return index[name]

    for name, _ in objective:
        intern(name)
    for terms, _, _ in rows:
        for name, _ in terms:
            intern(name)
    for name in sorted(binaries | generals | set(bounds)):
        intern(name)

    nvar = len(names)
    c = np.zeros(nvar)
    for name, coef in objective:
        c[index[name]] += coef

    lb = np.zeros(nvar)
    ub = np.full(nvar, np.inf)
    for i, name in enumerate(names):
        if name in binaries:
            ub[i] = 1.0
        rec = bounds.get(name)
        if rec is not None:
            if rec[0] is None and rec[1] is None:
                lb[i] = -np.inf
            else:
                if rec[0] is not None:
                    lb[i] = rec[0]
                if rec[1] is not None:
                    ub[i] = rec[1]

    data, ri, ci, cl, cu = [], [], [], [], []
    for rno, (terms, sense, rhs) in enumerate(rows):
        if sense is None:
            raise ValueError("constraint %d has no relation" % rno)
        for name, coef in terms:
            data.append(float(coef))
            ri.append(rno)
            ci.append(index[name])
        if sense == "<=":
            cl.append(-np.inf)
            cu.append(rhs)
        elif sense == ">=":
            cl.append(rhs)
            cu.append(np.inf)
        else:
            cl.append(rhs)
            cu.append(rhs)
    a = sparse.csr_matrix((data, (ri, ci)), shape=(len(rows), nvar))

    options = {"mip_rel_gap": 0.0}
    if time_limit is not None:
        options["time_limit"] = max(time_limit, 1.0)
    result = milp(
        c=c,
        constraints=LinearConstraint(a, np.array(cl), np.array(cu)),
        integrality=np.ones(nvar),
        bounds=Bounds(lb, ub),
        options=options,
    )

    if result.status == 0:
        with open(sol_path, "w") as out:
            for name, value in zip(names, result.x):
                out.write("%s %d\n" % (name, round(value)))
        return 0
    if result.status == 2:
        return 10
    if result.status == 1:
        return 20
    print("solver failed: %s" % result.message, file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
