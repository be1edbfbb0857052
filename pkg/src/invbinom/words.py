"""Exact shuffle algebra on G-function words.

A word is a tuple of letters (arbitrary exact or numeric complex values,
zeros allowed).  A :class:`WordCombination` is a finitely supported map

    (word, log_power, const_power)  ->  Fraction

representing  sum c * G(word; z) * log(z)**log_power * s**const_power,
where ``s`` is a symbolic scalar letter (the constant log offset used by
the contour-integrand expansion).  All coefficients are exact rationals;
nothing in this module evaluates numerically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Tuple

Word = Tuple[object, ...]

Term = Tuple[Word, int, int]  # (word, log_power, const_power)


def is_zero_letter(letter) -> bool:
    return letter == 0


@dataclass
class WordCombination:
    """Rational linear combination of words with log/scalar prefactors."""

    terms: dict = field(default_factory=dict)

    @classmethod
    def of(cls, word: Word, coeff=1, log_power: int = 0, const_power: int = 0):
        return cls({(tuple(word), log_power, const_power): Fraction(coeff)})

    @classmethod
    def unit(cls):
        return cls.of(())

    def _add_term(self, term: Term, coeff: Fraction) -> None:
        acc = self.terms.get(term, Fraction(0)) + coeff
        if acc == 0:
            self.terms.pop(term, None)
        else:
            self.terms[term] = acc

    def __add__(self, other: "WordCombination") -> "WordCombination":
        out = WordCombination(dict(self.terms))
        for term, coeff in other.terms.items():
            out._add_term(term, coeff)
        return out

    def __sub__(self, other: "WordCombination") -> "WordCombination":
        return self + other.scaled(-1)

    def scaled(self, factor) -> "WordCombination":
        factor = Fraction(factor)
        if factor == 0:
            return WordCombination()
        return WordCombination({t: c * factor for t, c in self.terms.items()})

    def items(self) -> Iterable[tuple[Term, Fraction]]:
        return self.terms.items()

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, WordCombination) and self.terms == other.terms

    @property
    def plain_terms(self) -> dict:
        """word -> coefficient restriction (no log or scalar prefactor)."""
        return {w: c for (w, m, j), c in self.terms.items() if m == 0 and j == 0}

    @property
    def log_prefactor_terms(self) -> dict:
        """(word, log_power) -> coefficient for terms carrying log powers."""
        return {(w, m): c for (w, m, j), c in self.terms.items() if m > 0 and j == 0}

    def coefficient_total(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))


def shuffle(u: Word, v: Word) -> WordCombination:
    """All order-preserving interleavings of u and v, with multiplicity.

    Represents the product G(u; z) * G(v; z).
    """
    u, v = tuple(u), tuple(v)
    out: dict = {}
    _shuffle_into(u, v, (), Fraction(1), out)
    return WordCombination({(w, 0, 0): c for w, c in out.items()})


def _shuffle_into(u: Word, v: Word, prefix: Word, coeff: Fraction, out: dict) -> None:
    if not u or not v:
        word = prefix + u + v
        out[word] = out.get(word, Fraction(0)) + coeff
        return
    _shuffle_into(u[1:], v, prefix + (u[0],), coeff, out)
    _shuffle_into(u, v[1:], prefix + (v[0],), coeff, out)


def shuffle_combinations(a: WordCombination, b: WordCombination) -> WordCombination:
    """Bilinear extension of the shuffle product; prefactor powers add."""
    out = WordCombination()
    for (wa, ma, ja), ca in a.items():
        for (wb, mb, jb), cb in b.items():
            for (w, _, _), mult in shuffle(wa, wb).items():
                out._add_term((w, ma + mb, ja + jb), ca * cb * mult)
    return out


def shuffle_power(base: WordCombination, n: int) -> WordCombination:
    acc = WordCombination.unit()
    for _ in range(n):
        acc = shuffle_combinations(acc, base)
    return acc


def trailing_zero_count(word: Word) -> int:
    n = 0
    for letter in reversed(word):
        if not is_zero_letter(letter):
            break
        n += 1
    return n


def remove_trailing_zeros(word: Word) -> WordCombination:
    """Rewrite G(word; z) so every remaining word ends in a nonzero letter.

    Uses shuffle regularization against the single-letter word (0): since
    G(0; z) = log z, shuffling (0) into w[:-1] isolates G(w) with its
    multiplicity and leaves words with strictly fewer trailing zeros.  The
    output combination is numerically identical to G(word; z).
    """
    word = tuple(word)
    if word and all(is_zero_letter(l) for l in word):
        raise ValueError("all-zero word: use the log-power boundary value directly")
    pending = WordCombination.of(word)
    done = WordCombination()
    while pending.terms:
        (w, m, j), coeff = next(iter(pending.terms.items()))
        del pending.terms[(w, m, j)]
        if not w or not is_zero_letter(w[-1]):
            done._add_term((w, m, j), coeff)
            continue
        head = w[:-1]
        zero = w[-1]
        mult = trailing_zero_count(head) + 1
        # G(head)*log z  =  mult*G(w) + sum of insertions short of the end
        pending._add_term((head, m + 1, j), coeff / mult)
        for (ins, _, _), k in shuffle((zero,), head).items():
            if ins == w:
                continue
            pending._add_term((ins, m, j), -coeff * k / mult)
    return done


def integrand_word_expansion(k: int, sign: int) -> WordCombination:
    """Expand log^(k-2)(s0 * t/(1-t**2)) * log t into words over {-1, 0, 1}.

    Here t is the contour variable z/i, and the constant offset
    s0 = (1-w**2)/(i*w) for sign=+1 (or its negative for sign=-1) is kept
    symbolic: a term with const_power = j carries log(+-s0)**j.  On branch-
    consistent regions log(t/(1-t**2)) = G(0;t) - G(1;t) - G(-1;t) and
    log t = G(0;t), so the expansion is exact pointwise there.
    """
    if not 2 <= k <= 6:
        raise ValueError(f"k must lie in 2..6, got {k}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    base = (
        WordCombination.of((0,))
        + WordCombination.of((1,), -1)
        + WordCombination.of((-1,), -1)
    )
    log_t = WordCombination.of((0,))
    out = WordCombination()
    for j in range(k - 1):
        block = shuffle_combinations(shuffle_power(base, k - 2 - j), log_t)
        out = out + WordCombination(
            {(w, m, jc + j): c * comb(k - 2, j) for (w, m, jc), c in block.items()}
        )
    return out
