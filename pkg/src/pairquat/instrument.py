"""Operation-counting scalar for auditing arithmetic cost claims.

Wrap kernel inputs in CountingScalar and run the kernel unchanged; the
shared OpCounter then holds the exact number of multiplications,
divisions, and square roots performed. Implicit conversion to float is
blocked so a kernel cannot smuggle work through math.* calls.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class OpCounter:
    mul: int = 0
    div: int = 0
    add: int = 0
    sqrt: int = 0

    def reset(self) -> None:
        self.mul = self.div = self.add = self.sqrt = 0


@dataclass(frozen=True, slots=True)
class CountingScalar:
    value: float
    counter: OpCounter = field(compare=False)

    def _wrap(self, x) -> "CountingScalar":
        return CountingScalar(float(x), self.counter)

    @staticmethod
    def _raw(x) -> float:
        return x.value if isinstance(x, CountingScalar) else float(x)

    def __add__(self, other):
        self.counter.add += 1
        return self._wrap(self.value + self._raw(other))

    __radd__ = __add__

    def __sub__(self, other):
        self.counter.add += 1
        return self._wrap(self.value - self._raw(other))

    def __rsub__(self, other):
        self.counter.add += 1
        return self._wrap(self._raw(other) - self.value)

    def __mul__(self, other):
        self.counter.mul += 1
        return self._wrap(self.value * self._raw(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        self.counter.div += 1
        return self._wrap(self.value / self._raw(other))

    def __rtruediv__(self, other):
        self.counter.div += 1
        return self._wrap(self._raw(other) / self.value)

    def __pow__(self, exponent):
        if exponent == 0.5:
            self.counter.sqrt += 1
            return self._wrap(self.value**0.5)
        raise TypeError("CountingScalar only audits square roots via ** 0.5")

    def __neg__(self):
        return self._wrap(-self.value)

    def __abs__(self):
        return self._wrap(abs(self.value))

    def __lt__(self, other):
        return self.value < self._raw(other)

    def __le__(self, other):
        return self.value <= self._raw(other)

    def __gt__(self, other):
        return self.value > self._raw(other)

    def __ge__(self, other):
        return self.value >= self._raw(other)

    def __float__(self):
        raise TypeError("CountingScalar must not be converted implicitly; read .value")


def counted_inputs(*vectors: tuple[float, ...]) -> tuple[OpCounter, list[tuple[CountingScalar, ...]]]:
    """Wrap each vector's components around one fresh shared counter."""
    counter = OpCounter()
    wrapped = [tuple(CountingScalar(float(c), counter) for c in vec) for vec in vectors]
    return counter, wrapped
