"""Pattern-avoiding peak functions R_n(P) and their Schur Q expansions."""

import json
import sys
from fractions import Fraction

from . import _peakfn

__all__ = [
    "NotInSpan",
    "r_n",
    "expand",
    "is_symmetric",
    "schur_q",
    "peaks",
    "rsk",
    "sagan_worley",
    "phi",
    "phi_preimage",
    "nonsymmetric_witness",
    "conjecture_check",
    "run_cli",
    "main",
]


class NotInSpan(ValueError):
    """R_n(P) is not a combination of Schur Q-functions."""

    def __init__(self, info):
        self.degree = info["degree"]
        self.witness = tuple(info["witness"])
        self.expected = Fraction(info["expected"])
        self.achieved = Fraction(info["achieved"])
        super().__init__(
            f"not in span: peak set {set(self.witness) or '{}'} expects {self.expected}, "
            f"best combination gives {self.achieved}"
        )


def _patterns(p):
    if p is None:
        return ""
    if isinstance(p, str):
        return p
    return ",".join(_perm(q) for q in p)


def _perm(p):
    if isinstance(p, str):
        return p
    return "[" + ",".join(str(int(x)) for x in p) + "]"


def _unperm(text):
    if text.startswith("["):
        return tuple(int(x) for x in text[1:-1].split(","))
    return tuple(int(x) for x in text)


def _number(c):
    return int(c) if isinstance(c, int) or "/" not in c else Fraction(c)


def _terms(text):
    data = json.loads(text)
    if data.get("not_in_span"):
        raise NotInSpan(data)
    return {tuple(t["index"]): _number(t["coeff"]) for t in data["terms"]}


def r_n(patterns, n, basis="K", jobs=1):
    """{index: coefficient} of R_n(P) in basis K (peak sets), F or M (compositions)."""
    return _terms(_peakfn.r_n(_patterns(patterns), n, basis, jobs))


def expand(patterns, n):
    """{strict partition: coefficient} of R_n(P) in Schur Q-functions; raises NotInSpan."""
    return _terms(_peakfn.expand(_patterns(patterns), n))


def is_symmetric(patterns, n):
    return _peakfn.is_symmetric(_patterns(patterns), n)


def schur_q(partition):
    """Q_lambda as {peak set: coefficient}."""
    if not isinstance(partition, str):
        partition = "(" + ",".join(str(int(x)) for x in partition) + ")"
    return _terms(_peakfn.schur_q(partition))


def peaks(perm):
    """(descent set, peak set), 1-based."""
    des, pk = _peakfn.peaks(_perm(perm))
    return tuple(des), tuple(pk)


def rsk(perm):
    return _peakfn.rsk(_perm(perm))


def sagan_worley(perm):
    """(R rows, (S rows, marked entries))."""
    return _peakfn.sagan_worley(_perm(perm))


def phi(perm):
    return _peakfn.phi(_perm(perm))


def phi_preimage(rows):
    if not isinstance(rows, str):
        rows = "/".join(",".join(str(x) for x in row) for row in rows)
    return [_unperm(p) for p in _peakfn.phi_preimage(rows)]


def nonsymmetric_witness(patterns, n_max):
    return _peakfn.nonsymmetric_witness(_patterns(patterns), n_max)


def conjecture_check(k, n):
    report = json.loads(_peakfn.conjecture_check(k, n))
    exp = report["expansion"]
    if exp.get("not_in_span"):
        report["expansion"] = NotInSpan(exp)
    else:
        report["expansion"] = {tuple(t["index"]): _number(t["coeff"]) for t in exp["terms"]}
    return report


def run_cli(args):
    """Runs the command-line interface in-process: (exit code, stdout, stderr)."""
    return _peakfn.run_cli([str(a) for a in args])


def main():
    code, out, err = run_cli(sys.argv[1:])
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
