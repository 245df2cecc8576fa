"""Finite fields F_q = Z[tau]/(p) with packed-code arithmetic and the
reduction homomorphism."""

from __future__ import annotations

from dataclasses import dataclass

from .ring import EvenPrimeError, GoldenInt, GoldenPrime, PrimeClass


@dataclass(frozen=True)
class FieldCtx:
    """F_q as residue pairs x + y*theta mod (char, theta^2 - theta - 1).

    Elements are packed into single integer codes: degree 1 stores x itself,
    degree 2 stores x*char + y. theta is the image of tau, so tau_code always
    satisfies t^2 = t + 1.
    """

    char: int
    degree: int
    q: int
    tau_code: int

    @property
    def one(self) -> int:
        return self.char if self.degree == 2 else 1

    def encode(self, x: int, y: int = 0) -> int:
        if self.degree == 1:
            if y:
                raise ValueError("degree-1 field has no theta component")
            return x % self.q
        return (x % self.char) * self.char + (y % self.char)

    def decode(self, code: int) -> tuple[int, int]:
        if self.degree == 1:
            return code, 0
        return divmod(code, self.char)

    def reduce(self, z: GoldenInt) -> int:
        """Ring homomorphism Z[tau] -> F_q sending tau to tau_code."""
        if self.degree == 1:
            return (z.a + z.b * self.tau_code) % self.q
        return self.encode(z.a, z.b)

    def add(self, u: int, v: int) -> int:
        if self.degree == 1:
            return (u + v) % self.q
        r = self.char
        return ((u // r + v // r) % r) * r + (u % r + v % r) % r

    def neg(self, u: int) -> int:
        if self.degree == 1:
            return -u % self.q
        r = self.char
        return (-(u // r) % r) * r + (-(u % r) % r)

    def sub(self, u: int, v: int) -> int:
        return self.add(u, self.neg(v))

    def mul(self, u: int, v: int) -> int:
        if self.degree == 1:
            return (u * v) % self.q
        r = self.char
        x1, y1 = divmod(u, r)
        x2, y2 = divmod(v, r)
        return ((x1 * x2 + y1 * y2) % r) * r + (x1 * y2 + y1 * x2 + y1 * y2) % r

    def inv(self, u: int) -> int:
        if u == 0:
            raise ZeroDivisionError("field inverse of zero")
        if self.degree == 1:
            return pow(u, self.q - 2, self.q)
        r = self.char
        x, y = divmod(u, r)
        n = (x * x + x * y - y * y) % r  # norm to F_r, nonzero for u != 0
        ninv = pow(n, r - 2, r)
        return ((x + y) * ninv % r) * r + (-y * ninv) % r

    def pow_(self, u: int, e: int) -> int:
        if e < 0:
            return self.pow_(self.inv(u), -e)
        out, base = self.one, u
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def is_square(self, u: int) -> bool:
        """Euler criterion; defined for nonzero u in odd-order fields."""
        if self.q % 2 == 0:
            raise EvenPrimeError("squareness is undefined in even characteristic")
        if u == 0:
            raise ValueError("squareness is undefined at zero")
        return self.pow_(u, (self.q - 1) // 2) == self.one


@dataclass(frozen=True)
class FieldElem:
    """A field element bound to its context; thin wrapper over packed codes."""

    ctx: FieldCtx
    code: int

    @property
    def x(self) -> int:
        return self.ctx.decode(self.code)[0]

    @property
    def y(self) -> int:
        return self.ctx.decode(self.code)[1]

    def __add__(self, other: FieldElem) -> FieldElem:
        return FieldElem(self.ctx, self.ctx.add(self.code, other.code))

    def __sub__(self, other: FieldElem) -> FieldElem:
        return FieldElem(self.ctx, self.ctx.sub(self.code, other.code))

    def __neg__(self) -> FieldElem:
        return FieldElem(self.ctx, self.ctx.neg(self.code))

    def __mul__(self, other: FieldElem) -> FieldElem:
        return FieldElem(self.ctx, self.ctx.mul(self.code, other.code))

    def __truediv__(self, other: FieldElem) -> FieldElem:
        return FieldElem(self.ctx, self.ctx.mul(self.code, self.ctx.inv(other.code)))

    def __pow__(self, e: int) -> FieldElem:
        return FieldElem(self.ctx, self.ctx.pow_(self.code, e))

    def __bool__(self) -> bool:
        return self.code != 0

    def __str__(self) -> str:
        x, y = self.ctx.decode(self.code)
        return str(x) if self.ctx.degree == 1 or y == 0 else f"{x}+{y}th"


def build_field(p: GoldenPrime) -> FieldCtx:
    """Construct Z[tau]/(p) for any prime class."""
    if p.klass is PrimeClass.EVEN:
        return FieldCtx(2, 2, 4, 1)
    if p.klass is PrimeClass.CLASS_I:
        return FieldCtx(5, 1, 5, 3)
    if p.klass is PrimeClass.CLASS_II:
        return FieldCtx(p.char, 2, p.q, 1)
    q = p.q
    t = (-p.c * pow(p.d, q - 2, q)) % q
    return FieldCtx(q, 1, q, t)
