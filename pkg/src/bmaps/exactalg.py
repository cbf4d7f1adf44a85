"""Exact rationals, dense univariate polynomials and rational functions.

Rationals are :class:`fractions.Fraction`.  Polynomials carry the name of
their indeterminate (``"alpha"`` or ``"beta"``) as data, and mixing two
names is an error rather than a coercion.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

ALPHA = "alpha"
BETA = "beta"

_ZERO = Fraction(0)
_ONE = Fraction(1)


class NonPolynomial(ArithmeticError):
    """A rational function expected to be a polynomial has a nontrivial denominator."""

    def __init__(self, value, context=None):
        self.value = value
        self.context = context
        msg = f"not a polynomial: {value}"
        if context is not None:
            msg += f" (at {context})"
        super().__init__(msg)


class NotInSpan(ArithmeticError):
    """The requested basis decomposition has no exact solution."""


class IndeterminateMismatch(TypeError):
    pass


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot use {c!r} as an exact coefficient")


def _strip(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Dense polynomial with :class:`Fraction` coefficients, lowest power first.

    >>> b = poly_var(BETA)
    >>> (1 + b) * (1 + b)
    Poly([1, 2, 1], 'beta')
    >>> (b * b)(-1)
    Fraction(1, 1)
    """

    __slots__ = ("coeffs", "var", "_hash")

    def __init__(self, coeffs=(), var: str = ALPHA):
        self.coeffs = _strip([_frac(c) for c in coeffs])
        self.var = var
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple, var: str) -> Poly:
        p = object.__new__(cls)
        p.coeffs = coeffs
        p.var = var
        p._hash = None
        return p

    @classmethod
    def const(cls, c, var: str = ALPHA) -> Poly:
        c = _frac(c)
        return cls._raw((c,) if c else (), var)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _ZERO

    def _check(self, other: Poly):
        if self.var != other.var:
            raise IndeterminateMismatch(f"cannot combine polynomials in {self.var} and {other.var}")

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Rational)):
            return Poly.const(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Poly._raw(_strip(out), self.var)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw((), self.var)
        if len(b) == 1:
            return self.scale(b[0])
        if len(a) == 1:
            return other.scale(a[0])
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly._raw(_strip(out), self.var)

    __rmul__ = __mul__

    def scale(self, c) -> Poly:
        c = _frac(c)
        if not c:
            return Poly._raw((), self.var)
        if c == 1:
            return self
        return Poly._raw(tuple(x * c for x in self.coeffs), self.var)

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.const(1, self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.coeffs
        dl = len(d) - 1
        inv = 1 / d[-1]
        if len(rem) <= dl:
            return Poly._raw((), self.var), self
        quo = [_ZERO] * (len(rem) - dl)
        for k in range(len(rem) - 1, dl - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c * inv
            quo[k - dl] = q
            for i in range(dl + 1):
                rem[k - dl + i] -= q * d[i]
        return Poly._raw(_strip(quo), self.var), Poly._raw(_strip(rem[:dl]), self.var)

    def __floordiv__(self, other: Poly) -> Poly:
        return self.divmod(other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return self.divmod(other)[1]

    def monic(self) -> Poly:
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(1 / self.coeffs[-1])

    def __call__(self, x):
        """Evaluate at an exact point (Horner)."""
        x = _frac(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    eval_at = __call__

    def compose(self, other: Poly) -> Poly:
        """self(other(t)); the result lives in other's indeterminate."""
        acc = Poly._raw((), other.var)
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def retag(self, var: str) -> Poly:
        return Poly._raw(self.coeffs, var)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.var, self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        cs = [str(c) if c.denominator != 1 else str(c.numerator) for c in self.coeffs]
        return f"Poly([{', '.join(cs)}], {self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        sym = {"alpha": "a", "beta": "b"}.get(self.var, self.var)
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (sym if k == 1 else f"{sym}^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data, var: str = BETA) -> Poly:
        return cls([Fraction(s) for s in data], var)


def poly_var(var: str = ALPHA) -> Poly:
    """The polynomial t in the indeterminate ``var``."""
    return Poly._raw((_ZERO, _ONE), var)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (zero if both are zero)."""
    a._check(b)
    while b.coeffs:
        a, b = b, a.divmod(b)[1]
    return a.monic()


class RatFunc:
    """Normalized quotient of two polynomials in one indeterminate.

    The denominator is monic and coprime to the numerator, so equality is
    structural.

    >>> a = RatFunc.var()
    >>> ((a * a - 1) / (a - 1)) == a + 1
    True
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, var: str | None = None):
        if not isinstance(num, Poly):
            num = Poly.const(num, var or (den.var if isinstance(den, Poly) else ALPHA))
        if den is None:
            den = Poly.const(1, num.var)
        elif not isinstance(den, Poly):
            den = Poly.const(den, num.var)
        num._check(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> RatFunc:
        r = object.__new__(cls)
        r.num = num
        r.den = den
        r._hash = None
        return r

    @classmethod
    def const(cls, c, var: str = ALPHA) -> RatFunc:
        return cls._raw(Poly.const(c, var), Poly.const(1, var))

    @classmethod
    def var(cls, var: str = ALPHA) -> RatFunc:
        return cls._raw(poly_var(var), Poly.const(1, var))

    @property
    def indeterminate(self) -> str:
        return self.num.var

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def is_polynomial(self) -> bool:
        return len(self.den.coeffs) == 1

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.num.var != self.num.var:
                raise IndeterminateMismatch(
                    f"cannot combine rational functions in {self.num.var} and {other.num.var}"
                )
            return other
        if isinstance(other, Poly):
            self.num._check(other)
            return RatFunc._raw(other, Poly.const(1, other.var))
        if isinstance(other, (int, Rational)):
            return RatFunc.const(other, self.num.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num.coeffs:
            return self
        if not self.num.coeffs:
            return other
        if self.den == other.den:
            if len(self.den.coeffs) == 1:
                return RatFunc._raw(self.num + other.num, self.den)
            return RatFunc._from(self.num + other.num, self.den)
        return RatFunc._from(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                return RatFunc.const(0, self.num.var)
            return RatFunc._raw(self.num.scale(other), self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num.coeffs or not other.num.coeffs:
            return RatFunc.const(0, self.num.var)
        if len(self.den.coeffs) == 1 and len(other.den.coeffs) == 1:
            return RatFunc._raw(self.num * other.num, self.den)
        # cross-cancel before multiplying keeps degrees small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1, d2 = self.num // g1, other.den // g1
        n2, d1 = other.num // g2, self.den // g2
        num, den = n1 * n2, d1 * d2
        lc = den.coeffs[-1]
        if lc != 1:
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        return RatFunc._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if not self.num.coeffs:
            raise ZeroDivisionError("inverse of the zero rational function")
        lc = self.num.coeffs[-1]
        return RatFunc._raw(self.den.scale(1 / lc), self.num.scale(1 / lc))

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                raise ZeroDivisionError("division of a rational function by zero")
            return RatFunc._raw(self.num.scale(Fraction(1) / _frac(other)), self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc._raw(self.num**k, self.den**k)

    @classmethod
    def _from(cls, num: Poly, den: Poly) -> RatFunc:
        n, d = _normalize(num, den)
        return cls._raw(n, d)

    def normalize(self) -> RatFunc:
        return RatFunc._from(self.num, self.den)

    def __call__(self, x):
        d = self.den(x)
        if not d:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    eval_at = __call__

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, Rational)):
            o = self._coerce(other)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num.coeffs)

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        return f"({self.num})/({self.den})"


def _normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not num.coeffs:
        return num, Poly.const(1, num.var)
    if len(den.coeffs) > 1 and len(num.coeffs) > 0:
        g = poly_gcd(num, den)
        if len(g.coeffs) > 1:
            num, den = num // g, den // g
    lc = den.coeffs[-1]
    if lc != 1:
        inv = 1 / lc
        num, den = num.scale(inv), den.scale(inv)
    return num, den


def substitute_alpha_to_beta(f: RatFunc) -> RatFunc:
    """Replace alpha by beta + 1 in numerator and denominator."""
    if f.indeterminate != ALPHA:
        raise IndeterminateMismatch(f"expected a function of alpha, got one of {f.indeterminate}")
    shift = Poly._raw((_ONE, _ONE), BETA)
    return RatFunc._from(f.num.compose(shift), f.den.compose(shift))


def as_polynomial(f: RatFunc, context=None) -> Poly:
    """The numerator of ``f`` if its denominator is 1, else :class:`NonPolynomial`."""
    if len(f.den.coeffs) != 1:
        raise NonPolynomial(f, context)
    return f.num.scale(1 / f.den.coeffs[0])


def solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a possibly overdetermined linear system exactly.

    Raises :class:`NotInSpan` when the system is inconsistent and
    ``ValueError`` when the solution is not unique.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [[_frac(x) for x in row] + [_frac(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(aug[i][n] for i in range(r, m)):
        raise NotInSpan("inconsistent linear system")
    if len(pivots) < n:
        raise ValueError("linear system has no unique solution")
    sol = [_ZERO] * n
    for i, c in enumerate(pivots):
        sol[c] = aug[i][n]
    return sol


def b_basis(g: int) -> list[Poly]:
    """The polynomials beta^{g-2i} (beta+1)^i for 0 <= i <= g//2."""
    b = poly_var(BETA)
    return [b ** (g - 2 * i) * (b + 1) ** i for i in range(g // 2 + 1)]


def b_basis_decompose(p: Poly, g: int) -> list[Fraction]:
    """Coefficients a_i with p = sum_i a_i beta^{g-2i} (beta+1)^i.

    There are g + 1 equations for g//2 + 1 unknowns, so success is a real
    constraint on ``p``; failure raises :class:`NotInSpan`.
    """
    if p.var != BETA:
        raise IndeterminateMismatch("b-basis decomposition expects a polynomial in beta")
    if g < 0:
        raise ValueError("g must be nonnegative")
    if p.degree > g:
        raise NotInSpan(f"degree {p.degree} exceeds g = {g}")
    basis = b_basis(g)
    rows = [[q.coeff(k) for q in basis] for k in range(g + 1)]
    return solve_exact(rows, [p.coeff(k) for k in range(g + 1)])
