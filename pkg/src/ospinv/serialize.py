"""JSON term records for polynomials, and the Omega document used by the CLI and golden files."""

from __future__ import annotations

import json

from .ring import AlgebraSignature, SuperPolynomial
from .scalar import Scalar, format_fraction, normalize, parse_fraction, real_imag

SCHEMA = 1


def term_records(f: SuperPolynomial) -> list[dict]:
    sig = f.sig
    out = []
    for key in f.sorted_keys():
        re, im = real_imag(f.terms[key])
        even = [[a, t, e] for s, e in enumerate(sig.even_exponents(key)) if e
                for a, t in [sig.slot_generator(s)]]
        even.sort(key=lambda r: (r[1], r[0]))
        odd = [list(sig.bit_generator(j)) for j in sig.odd_bits(key)]
        out.append({"coeff": {"re": format_fraction(re), "im": format_fraction(im)},
                    "even": even, "odd": odd})
    return out


def from_records(records, sig: AlgebraSignature) -> SuperPolynomial:
    terms = {}
    for r in records:
        c = normalize(Scalar(parse_fraction(r["coeff"]["re"]), parse_fraction(r["coeff"]["im"])))
        key = sig.encode({(a, t): e for a, t, e in r["even"]}, [tuple(p) for p in r["odd"]])
        if key in terms:
            raise ValueError("duplicate monomial in records")
        terms[key] = c
    return SuperPolynomial(sig, terms)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def polynomial_document(f: SuperPolynomial, **meta) -> dict:
    sig = f.sig
    lead = f.leading_term()
    doc = {
        "schema": SCHEMA,
        "signature": {"m": sig.m, "n": sig.n, "N": sig.N},
        "degree": f.degree() if f.terms else None,
        "term_count": len(f.terms),
        "leading_term": term_records(lead),
        "text": str(f),
        "terms": term_records(f),
    }
    doc.update(meta)
    return doc


def polynomial_from_document(doc: dict) -> SuperPolynomial:
    s = doc["signature"]
    return from_records(doc["terms"], AlgebraSignature(s["m"], s["n"], s["N"]))
