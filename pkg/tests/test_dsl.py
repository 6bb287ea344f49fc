"""Tests the manifold description language"""

import random

import pytest

from selfdeg.core.dsl import parse, render, tokenize
from selfdeg.core.manifold import canonicalize
from selfdeg.types import (
    I120,
    O48,
    T24,
    ConnectedSum,
    DPrime,
    DStar,
    Lens,
    ProductZm,
    S2xS1,
    Seifert,
    Slope,
    Spherical,
    Summand,
    TorusBundle,
    TorusSemiBundle,
    TPrime,
)
from selfdeg.types.exceptions import ParseError

from .test_base import EXAMPLE_H2E1, EXAMPLE_SUM, TestSelfDeg_Base

FUZZ_ALPHABET = "LDTISFZxon0123456789()[],;/#*~-' \t"
FUZZ_WORDS = ["S2xS1", "TB[", "TSB[", "SF(", "I120", "T24", "O48", "D*(", "D'(", "T'(", "Z(", "L("]


def spans_of(text):
    with pytest.raises(ParseError) as raised:
        parse(text)
    return [(d.span.begin, d.span.end) for d in raised.value.diagnostics]


def random_group(rng: random.Random):
    choice = rng.randrange(8)
    if choice == 0:
        return DStar(n=rng.randint(2, 9))
    if choice == 1:
        return T24()
    if choice == 2:
        return O48()
    if choice == 3:
        return I120()
    if choice == 4:
        return TPrime(q=rng.randint(1, 3))
    if choice == 5:
        return DPrime(n_prime=rng.choice([3, 5, 7]), q=rng.randint(2, 4))
    if choice == 6:
        return ProductZm(m=rng.choice([7, 11, 13]), inner=rng.choice([T24(), I120(), O48()]))
    p = rng.randint(1, 30)
    q = rng.choice([q for q in range(-p, 2 * p + 1) if _coprime(p, q)])
    return Lens(p=p, q=q)


def _coprime(p, q):
    while q:
        p, q = q, p % q
    return abs(p) == 1


def random_piece(rng: random.Random):
    choice = rng.randrange(5)
    if choice == 0:
        return S2xS1()
    if choice == 1:
        return Spherical(group=random_group(rng), reversed=rng.random() < 0.5)
    if choice == 2:
        k = rng.randint(-5, 5)
        return rng.choice([TorusBundle(a=1, b=k, c=0, d=1), TorusBundle(a=2 + k * k, b=1, c=1 + k * k, d=1)])
    if choice == 3:
        return rng.choice(
            [TorusSemiBundle(a=0, b=1, c=1, d=0), TorusSemiBundle(a=1, b=rng.randint(1, 4), c=0, d=1)]
        )
    slopes = tuple(
        Slope(beta=rng.choice([-1, 1, 2]), alpha=rng.choice([1, 3, 5, 7]))
        for _ in range(rng.randint(0, 4))
    )
    slopes = tuple(s for s in slopes if _coprime(s.beta, s.alpha))
    return Seifert(genus=rng.randint(1, 3), orientable_base=rng.random() < 0.7, slopes=slopes)


def random_descriptor(rng: random.Random):
    count = rng.randint(1, 4)
    if count == 1:
        return random_piece(rng)
    return ConnectedSum(
        pieces=tuple(
            Summand(piece=random_piece(rng), multiplicity=rng.randint(1, 3)) for _ in range(count)
        )
    )


class TestSelfDeg_Parse(TestSelfDeg_Base):
    """Parsing and rendering"""

    def test_tokens(self):
        """Comments and whitespace vanish"""
        kinds = [t.kind for t in tokenize("TB[2,-1;1,0] // a comment")]
        assert kinds == [
            "keyword", "symbol", "number", "symbol", "symbol", "number",
            "symbol", "number", "symbol", "number", "symbol",
        ]
        assert [t.text for t in tokenize("D*(3)#T'(1)")] == ["D*", "(", "3", ")", "#", "T'", "(", "1", ")"]

    def test_atoms(self):
        """One descriptor per production"""
        assert parse("S2xS1") == S2xS1()
        assert parse("L(7,9)") == Spherical(group=Lens(p=7, q=2))
        assert parse("L(7, -1)") == Spherical(group=Lens(p=7, q=6))
        assert parse("~L(7,2)") == Spherical(group=Lens(p=7, q=5))
        assert parse("~I120") == Spherical(group=I120(), reversed=True)
        assert parse("D*(3)") == Spherical(group=DStar(n=3))
        assert parse("T'(2)") == Spherical(group=TPrime(q=2))
        assert parse("D'(3,2)") == Spherical(group=DPrime(n_prime=3, q=2))
        assert parse("Z(7)xI120") == Spherical(group=ProductZm(m=7, inner=I120()))
        assert parse("TB[2,1;1,1]") == TorusBundle(a=2, b=1, c=1, d=1)
        assert parse("TSB[ 1, 2 ; 1, 3 ]") == TorusSemiBundle(a=1, b=2, c=1, d=3)
        assert parse("SF(n2)") == Seifert(genus=2, orientable_base=False)
        assert parse("SF(o0; 1/2, 1/3, 1/6)") == Seifert(
            genus=0,
            slopes=(Slope(beta=1, alpha=2), Slope(beta=1, alpha=3), Slope(beta=1, alpha=6)),
        )
        assert parse(b"L(5,2)") == Spherical(group=Lens(p=5, q=2))

    def test_sums(self):
        """Sums merge repeated pieces and sort them"""
        desc = parse("L(7,3) # I120 // trailing\n# L(7,10) # 2*~I120")
        assert desc == ConnectedSum(
            pieces=(
                Summand(piece=Spherical(group=I120())),
                Summand(piece=Spherical(group=I120(), reversed=True), multiplicity=2),
                Summand(piece=Spherical(group=Lens(p=7, q=3)), multiplicity=2),
            )
        )
        assert parse("1*L(5,1)") == Spherical(group=Lens(p=5, q=1))
        assert parse("2*L(5,1)") == ConnectedSum(
            pieces=(Summand(piece=Spherical(group=Lens(p=5, q=1)), multiplicity=2),)
        )

    def test_render(self):
        """Canonical text"""
        assert render(parse(EXAMPLE_SUM)) == EXAMPLE_SUM
        assert render(parse("2*L(7,3) # ~I120 # I120 # L(7,2) # L(7,8)")) == EXAMPLE_SUM
        assert render(parse(EXAMPLE_H2E1)) == EXAMPLE_H2E1
        assert render(parse("SF( o2 )")) == "SF(o2)"
        assert render(parse("Z(5)xT24")) == "Z(5)xT24"
        assert render(parse("TB[ -1, 0 ; 0, -1 ]")) == "TB[-1,0;0,-1]"
        assert render(parse("D'(3,2) # T'(1) # D*(3)")) == "D*(3) # T'(1) # D'(3,2)"

    def test_syntax_errors(self):
        """Located diagnostics for malformed text"""
        assert spans_of("L(7,1") == [(5, 5)]
        assert spans_of("Q(3)") == [(0, 1)]
        assert spans_of("") == [(0, 0)]
        assert spans_of("   // only a comment") == [(0, 20)]
        assert spans_of("L(7,1) L(5,1)") == [(7, 8)]
        assert spans_of("~S2xS1") == [(1, 6)]
        assert spans_of("~TB[2,1;1,1]") == [(1, 3)]
        assert spans_of("Z(7)xL(5,1)") == [(5, 6)]
        assert spans_of("SF(x2)") == [(3, 4)]
        assert spans_of("TB[2,1;1]") == [(8, 9)]
        assert spans_of(b"L(5,\xff)") == [(4, 5)]

    def test_validation_errors(self):
        """Violations point into the text"""
        assert spans_of("L(6,2)") == [(4, 5)]
        assert spans_of("L(7,1) # L(6,2)") == [(13, 14)]
        assert spans_of("SF(o2; 1/5, 2/10)") == [(12, 16)]
        assert spans_of("0*L(7,1)") == [(0, 1)]
        assert spans_of("SF(n0)") == [(3, 5)]
        assert spans_of("TB[2,1;1,2]") == [(0, 11)]
        assert spans_of("D'(4,1)") == [(3, 4), (5, 6)]
        assert spans_of("Z(5)xI120") == [(2, 3)]
        with pytest.raises(ParseError, match="gcd"):
            parse("L(6,2)")

    def test_nested_products(self):
        """Deep Z(m)x chains stop at a located diagnostic"""
        assert spans_of("Z(7)x" * 17 + "T24") == [(80, 81)]
        assert spans_of("Z(1)x" * 3000 + "T24") == [(80, 81)]
        with pytest.raises(ParseError, match="nested"):
            parse("Z(1)x" * 3000 + "T24")

    def test_ascii_only(self):
        """Digits and blanks outside ASCII are not part of the language"""
        assert spans_of("L(\u0663,1)") == [(2, 3)]
        assert spans_of("L(7,\u00a01)") == [(4, 5)]
        assert spans_of("L(7,1)\u3000# L(5,1)") == [(6, 7)]

    def test_fuzz(self):
        """Arbitrary text parses or fails with diagnostics inside the text"""
        rng = random.Random(20240607)
        for _ in range(2000):
            parts = []
            for _ in range(rng.randint(0, 8)):
                if rng.random() < 0.4:
                    parts.append(rng.choice(FUZZ_WORDS))
                else:
                    parts.append(rng.choice(FUZZ_ALPHABET))
            text = "".join(parts)
            try:
                desc = parse(text)
            except ParseError as e:
                assert e.diagnostics
                for diagnostic in e.diagnostics:
                    assert 0 <= diagnostic.span.begin <= diagnostic.span.end <= len(text)
            else:
                assert parse(render(desc)) == desc

    def test_round_trip(self):
        """render then parse gives back the canonical descriptor"""
        rng = random.Random(7)
        for _ in range(300):
            desc = random_descriptor(rng)
            assert parse(render(desc)) == canonicalize(desc), desc
