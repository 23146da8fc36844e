"""Coxeter systems: elements, words, walls and exact group arithmetic.

A `CoxeterSystem` is built from a `CoxeterMatrix` (symmetric integer matrix,
``0`` encoding an unbounded label).  Group elements are kept in ShortLex
normal form under the declared generator order, so equality of elements is
equality of normal forms.  All length and descent decisions go through the
geometric representation on roots with exact `Scalar` arithmetic; there is
no floating point and no tolerance anywhere.

The module also owns the group definition file format: an ordered list of
generator names followed by the matrix, rejected with line-precise errors
when malformed.
"""

from __future__ import annotations

from dataclasses import dataclass
from hashlib import sha256
from typing import Iterator, Sequence

from .scalars import ONE, SQRT2, SQRT3, SQRT5, TWO, ZERO, Scalar

#: Serialized label value that stands for an unbounded (infinite) edge label.
INFINITE_LABEL = 0

# 2*cos(pi/m) for the supported finite labels; INFINITE_LABEL maps to 2.
_HALF = Scalar.from_rational("1/2")

_TWO_COS = {
    2: ZERO,
    3: ONE,
    4: SQRT2,
    5: (ONE + SQRT5) * _HALF,
    6: SQRT3,
    INFINITE_LABEL: TWO,
}

SUPPORTED_LABELS = (2, 3, 4, 5, 6, INFINITE_LABEL)


class UnsupportedLabelError(ValueError):
    """A finite Coxeter label outside the exactly representable range."""


class GroupFileError(ValueError):
    """Malformed group definition file; message carries line/field detail."""


class MixedSystemError(ValueError):
    """Operands belong to different Coxeter systems."""


class InternalInconsistencyError(RuntimeError):
    """A theorem-guaranteed uniqueness or closure property failed: a bug."""


# ---------------------------------------------------------------------------
# Coxeter matrix and the group definition file


@dataclass(frozen=True)
class CoxeterMatrix:
    """Ordered generator names with a symmetric label matrix (0 = infinity)."""

    generators: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]
    name: str | None = None

    def __post_init__(self):
        n = len(self.generators)
        if n == 0:
            raise ValueError("a Coxeter matrix needs at least one generator")
        if len(set(self.generators)) != n:
            raise ValueError("generator names must be distinct")
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError(f"matrix must be {n}x{n}")
        for i in range(n):
            if self.entries[i][i] != 1:
                raise ValueError(f"diagonal entry m[{i},{i}] must be 1")
            for j in range(n):
                m = self.entries[i][j]
                if i != j and m != INFINITE_LABEL and m < 2:
                    raise ValueError(f"off-diagonal entry m[{i},{j}]={m} must be 0 or >= 2")
                if m != self.entries[j][i]:
                    raise ValueError(
                        f"matrix not symmetric: m[{i},{j}]={m} but m[{j},{i}]={self.entries[j][i]}"
                    )

    @property
    def rank(self) -> int:
        return len(self.generators)

    def label(self, i: int, j: int) -> int:
        """Label between generators i and j; INFINITE_LABEL means unbounded."""
        return self.entries[i][j]

    def canonical_text(self) -> str:
        rows = "\n".join(" ".join(str(m) for m in row) for row in self.entries)
        return f"generators: {' '.join(self.generators)}\nmatrix:\n{rows}\n"

    def content_hash(self) -> str:
        return sha256(self.canonical_text().encode("utf-8")).hexdigest()


def parse_group_file(text: str) -> CoxeterMatrix:
    """Parse a group definition file.

    Format (UTF-8 text, '#' comments and blank lines ignored)::

        name: optional display name
        generators: s t u
        matrix:
        1 3 3
        3 1 3
        3 3 1

    The matrix uses 0 for an unbounded label.  Errors name the offending
    line and field.
    """
    name: str | None = None
    generators: tuple[str, ...] | None = None
    rows: list[tuple[int, ...]] = []
    in_matrix = False
    matrix_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if in_matrix:
            fields = line.split()
            row = []
            for col, tok in enumerate(fields, start=1):
                try:
                    row.append(int(tok))
                except ValueError:
                    raise GroupFileError(
                        f"line {lineno}, entry {col}: {tok!r} is not an integer"
                    ) from None
            if generators is not None and len(row) != len(generators):
                raise GroupFileError(
                    f"line {lineno}: expected {len(generators)} entries, got {len(row)}"
                )
            rows.append(tuple(row))
            continue
        if line.startswith("name:"):
            name = line[len("name:"):].strip() or None
        elif line.startswith("generators:"):
            generators = tuple(line[len("generators:"):].split())
            if not generators:
                raise GroupFileError(f"line {lineno}: empty generator list")
        elif line.startswith("matrix:"):
            if generators is None:
                raise GroupFileError(f"line {lineno}: 'matrix:' before 'generators:'")
            in_matrix = True
            matrix_line = lineno
        else:
            raise GroupFileError(f"line {lineno}: unrecognized directive {line!r}")
    if generators is None:
        raise GroupFileError("missing 'generators:' line")
    if not in_matrix:
        raise GroupFileError("missing 'matrix:' section")
    if len(rows) != len(generators):
        raise GroupFileError(
            f"matrix starting at line {matrix_line}: expected {len(generators)} rows, got {len(rows)}"
        )
    try:
        return CoxeterMatrix(generators, tuple(rows), name)
    except ValueError as exc:
        raise GroupFileError(str(exc)) from None


def format_group_file(matrix: CoxeterMatrix) -> str:
    lines = []
    if matrix.name:
        lines.append(f"name: {matrix.name}")
    lines.append(f"generators: {' '.join(matrix.generators)}")
    lines.append("matrix:")
    lines.extend(" ".join(str(m) for m in row) for row in matrix.entries)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Roots


class Root:
    """A root in simple-root coordinates; positive or negative, never mixed."""

    __slots__ = ("coeffs", "_hash", "_sign")

    def __init__(self, coeffs: Sequence[Scalar]):
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "_hash", hash(self.coeffs))
        object.__setattr__(self, "_sign", 0)

    def __setattr__(self, name, value):
        raise AttributeError("Root is immutable")

    def sign(self) -> int:
        """+1 for a positive root, -1 for a negative one."""
        cached = self._sign
        if cached:
            return cached
        out = 0
        for c in self.coeffs:
            s = c.sign()
            if s == 0:
                continue
            if out == 0:
                out = s
            elif out != s:
                raise InternalInconsistencyError(
                    f"mixed-sign root coordinates: {self.coeffs}"
                )
        if out == 0:
            raise InternalInconsistencyError("zero vector is not a root")
        object.__setattr__(self, "_sign", out)
        return out

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs))

    def abs(self) -> "Root":
        return self if self.sign() > 0 else -self

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Root):
            return NotImplemented
        if self._hash != other._hash:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Root({', '.join(repr(c) for c in self.coeffs)})"


# ---------------------------------------------------------------------------
# Words

Word = tuple[int, ...]  # generator indices under the declared order


def word_prefix(v: Word, i: int) -> Word:
    """The prefix of length min(i, |v|)."""
    if i < 0:
        raise ValueError("prefix index must be >= 0")
    return v[: min(i, len(v))]


def word_infix(v: Word, i: int, j: int) -> Word:
    """The subword of the length-j prefix with the length-(i-1) prefix removed."""
    if not 1 <= i <= j:
        raise ValueError("infix requires 1 <= i <= j")
    return word_prefix(v, j)[i - 1 :]


# ---------------------------------------------------------------------------
# Elements


class Element:
    """A group element, identified with its ShortLex-least reduced word."""

    __slots__ = ("system", "word", "_hash")

    def __init__(self, system: "CoxeterSystem", word: Word):
        object.__setattr__(self, "system", system)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "_hash", hash((id(system), word)))

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    @property
    def length(self) -> int:
        return len(self.word)

    def __mul__(self, other: "Element") -> "Element":
        return self.system.multiply(self, other)

    def inverse(self) -> "Element":
        return self.system.inverse(self)

    def is_identity(self) -> bool:
        return not self.word

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and other.system is self.system
            and other.word == self.word
        )

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Element") -> bool:
        """ShortLex order under the declared generator order."""
        return (len(self.word), self.word) < (len(other.word), other.word)

    def __le__(self, other: "Element") -> bool:
        return self == other or self < other

    def __repr__(self):
        return f"<{self.system.render_word(self.word)}>"

    def __str__(self):
        return self.system.render_word(self.word)


@dataclass(frozen=True)
class CayleyBall:
    """All elements of length <= radius, in ShortLex order."""

    radius: int
    elements: tuple[Element, ...]

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: Element) -> bool:
        return g.length <= self.radius


# ---------------------------------------------------------------------------
# The system


class CoxeterSystem:
    """A finitely generated Coxeter system with exact root arithmetic.

    All values handed out (elements, roots, balls) are immutable; internal
    caches only grow and never change published results, so read sharing
    across threads is safe.
    """

    def __init__(self, matrix: CoxeterMatrix):
        for i in range(matrix.rank):
            for j in range(matrix.rank):
                if i != j and matrix.entries[i][j] not in _TWO_COS:
                    raise UnsupportedLabelError(
                        f"label m[{i},{j}]={matrix.entries[i][j]} not supported; "
                        f"supported labels are {SUPPORTED_LABELS} (0 = infinity)"
                    )
        self.matrix = matrix
        self.rank = matrix.rank
        self.generator_names = matrix.generators
        self._gen_index = {g: i for i, g in enumerate(matrix.generators)}
        # two_b[s][t] = 2*B(alpha_s, alpha_t): 2 on the diagonal, -2cos(pi/m) off it.
        self._two_b = tuple(
            tuple(
                TWO if s == t else -_TWO_COS[matrix.entries[s][t]]
                for t in range(self.rank)
            )
            for s in range(self.rank)
        )
        self.simple_roots = tuple(
            Root(tuple(ONE if t == s else ZERO for t in range(self.rank)))
            for s in range(self.rank)
        )
        self._reflect_cache: dict[tuple[int, Root], Root] = {}
        self._elements: dict[Word, Element] = {}
        self.identity = self._intern(())
        self.gens = tuple(self._intern((s,)) for s in range(self.rank))
        self._rmul: dict[tuple[Element, int], Element] = {}
        self._inverse: dict[Element, Element] = {self.identity: self.identity}
        self._inversions: dict[Element, frozenset[Root]] = {
            self.identity: frozenset()
        }
        self._ball_layers: list[list[Element]] = [[self.identity]]
        self._root_depth: dict[Root, int] = {}
        self._simple_set = frozenset(self.simple_roots)

    # -- basic plumbing ----------------------------------------------------

    def _intern(self, word: Word) -> Element:
        el = self._elements.get(word)
        if el is None:
            el = Element(self, word)
            self._elements[word] = el
        return el

    def generator(self, name: str) -> Element:
        try:
            return self.gens[self._gen_index[name]]
        except KeyError:
            raise ValueError(f"unknown generator {name!r}") from None

    def render_word(self, word: Word) -> str:
        """Deterministic textual form of a word; the empty word prints as '-'.

        Single-character generator names concatenate; otherwise names are
        space-separated.
        """
        if not word:
            return "-"
        names = [self.generator_names[s] for s in word]
        if all(len(n) == 1 for n in self.generator_names):
            return "".join(names)
        return " ".join(names)

    def parse_word(self, text: str) -> Word:
        text = text.strip()
        if text == "-" or not text:
            return ()
        if all(len(n) == 1 for n in self.generator_names) and " " not in text:
            letters = list(text)
        else:
            letters = text.split()
        out = []
        for letter in letters:
            if letter not in self._gen_index:
                raise ValueError(f"unknown generator {letter!r} in word {text!r}")
            out.append(self._gen_index[letter])
        return tuple(out)

    # -- root action --------------------------------------------------------

    def reflect(self, s: int, root: Root) -> Root:
        """Apply the simple reflection for generator index s to a root."""
        key = (s, root)
        cached = self._reflect_cache.get(key)
        if cached is not None:
            return cached
        row = self._two_b[s]
        c = ZERO
        for t, x in enumerate(root.coeffs):
            if not x.is_zero():
                c = c + row[t] * x
        coeffs = list(root.coeffs)
        coeffs[s] = coeffs[s] - c
        out = Root(coeffs)
        self._reflect_cache[key] = out
        return out

    def bilinear(self, beta: Root, gamma: Root) -> Scalar:
        """B(beta, gamma) for the standard symmetric form with B(alpha,alpha)=1."""
        total = ZERO
        for s, x in enumerate(beta.coeffs):
            if x.is_zero():
                continue
            row = self._two_b[s]
            for t, y in enumerate(gamma.coeffs):
                if not y.is_zero():
                    total = total + x * y * row[t]
        return total * _HALF

    def act_word(self, word: Word, root: Root) -> Root:
        """Image of a root under the element represented by `word`."""
        out = root
        for s in reversed(word):
            out = self.reflect(s, out)
        return out

    def act_inverse_word(self, word: Word, root: Root) -> Root:
        """Image of a root under the inverse of the element of `word`."""
        out = root
        for s in word:
            out = self.reflect(s, out)
        return out

    # -- normal forms --------------------------------------------------------

    def _left_exchange(self, s: int, word: Word) -> Word:
        """Reduced word for s*w given reduced w with s a left descent."""
        gamma = self.simple_roots[s]
        for j, letter in enumerate(word):
            if gamma == self.simple_roots[letter]:
                return word[:j] + word[j + 1 :]
            gamma = self.reflect(letter, gamma)
        raise InternalInconsistencyError(
            f"no exchange position for descent {s} in {word}"
        )

    def _smallest_left_descent(self, word: Word) -> int | None:
        for s in range(self.rank):
            if self.act_inverse_word(word, self.simple_roots[s]).sign() < 0:
                return s
        return None

    def _normalize_reduced(self, word: Word) -> Word:
        """ShortLex-least reduced word of the element of a reduced word."""
        out: list[int] = []
        rem = word
        while rem:
            s = self._smallest_left_descent(rem)
            if s is None:
                raise InternalInconsistencyError(f"nonempty word without descent: {rem}")
            out.append(s)
            if s == rem[0]:
                rem = rem[1:]
            else:
                rem = self._left_exchange(s, rem)
        return tuple(out)

    def right_multiply(self, g: Element, s: int) -> Element:
        """Normal form of g * (generator s)."""
        key = (g, s)
        cached = self._rmul.get(key)
        if cached is not None:
            return cached
        alpha = self.simple_roots[s]
        if self.act_word(g.word, alpha).sign() < 0:
            # right descent: strong exchange on the right
            gamma = alpha
            word = g.word
            reduced = None
            for j in range(len(word) - 1, -1, -1):
                if gamma == self.simple_roots[word[j]]:
                    reduced = word[:j] + word[j + 1 :]
                    break
                gamma = self.reflect(word[j], gamma)
            if reduced is None:
                raise InternalInconsistencyError(f"missing right exchange in {word}")
            out = self._intern(self._normalize_reduced(reduced))
        else:
            out = self._intern(self._normalize_reduced(g.word + (s,)))
        self._rmul[key] = out
        return out

    def element(self, word) -> Element:
        """Normal form of an arbitrary word (string, names, or indices)."""
        if isinstance(word, str):
            word = self.parse_word(word)
        else:
            word = tuple(
                w if isinstance(w, int) else self._gen_index[w] for w in word
            )
        g = self.identity
        for s in word:
            if not 0 <= s < self.rank:
                raise ValueError(f"generator index {s} out of range")
            g = self.right_multiply(g, s)
        return g

    def multiply(self, g: Element, h: Element) -> Element:
        if g.system is not self or h.system is not self:
            raise MixedSystemError("elements from different systems")
        out = g
        for s in h.word:
            out = self.right_multiply(out, s)
        return out

    def inverse(self, g: Element) -> Element:
        cached = self._inverse.get(g)
        if cached is not None:
            return cached
        out = self.identity
        for s in reversed(g.word):
            out = self.right_multiply(out, s)
        self._inverse[g] = out
        self._inverse[out] = g
        return out

    def word_metric(self, g: Element, h: Element) -> int:
        """d(g, h) = length of g^{-1} h."""
        return self.multiply(self.inverse(g), h).length

    # -- descents, inversions, walls ----------------------------------------

    def descents(self, g: Element, side: str) -> frozenset[str]:
        """Generators s with l(sg) < l(g) (left) or l(gs) < l(g) (right)."""
        if side == "left":
            test = lambda s: self.act_inverse_word(g.word, self.simple_roots[s])
        elif side == "right":
            test = lambda s: self.act_word(g.word, self.simple_roots[s])
        else:
            raise ValueError("side must be 'left' or 'right'")
        return frozenset(
            self.generator_names[s] for s in range(self.rank) if test(s).sign() < 0
        )

    def inversion_walls(self, g: Element) -> frozenset[Root]:
        """Positive roots of the walls separating the identity from g.

        There are exactly l(g) of them; g <= h in right weak order iff the
        set for g is contained in the set for h.
        """
        cached = self._inversions.get(g)
        if cached is not None:
            return cached
        parent = self._intern(g.word[:-1])
        new_wall = self.act_word(parent.word, self.simple_roots[g.word[-1]])
        out = self.inversion_walls(parent) | {new_wall}
        self._inversions[g] = out
        return out

    def separating_walls(self, g: Element, h: Element) -> frozenset[Root]:
        """Walls with g and h in different half-spaces; size equals d(g, h)."""
        return self.inversion_walls(g) ^ self.inversion_walls(h)

    def wall_side(self, g: Element, wall: Root) -> int:
        """+1 if g is on the identity side of the wall, -1 otherwise."""
        return self.act_inverse_word(g.word, wall).sign()

    def is_suffix(self, w: Element, g: Element) -> bool:
        """True iff g = u*w with l(g) = l(u) + l(w)."""
        return g.length == self.multiply(g, self.inverse(w)).length + w.length

    # -- balls ----------------------------------------------------------------

    def ball(self, radius: int) -> CayleyBall:
        """All elements of length <= radius, ShortLex-ordered, cached."""
        while len(self._ball_layers) <= radius:
            frontier = self._ball_layers[-1]
            depth = len(self._ball_layers)
            seen = set()
            layer = []
            for g in frontier:
                for s in range(self.rank):
                    h = self.right_multiply(g, s)
                    if h.length == depth and h not in seen:
                        seen.add(h)
                        layer.append(h)
            layer.sort()
            self._ball_layers.append(layer)
        flat: list[Element] = []
        for layer in self._ball_layers[: radius + 1]:
            flat.extend(layer)
        return CayleyBall(radius, tuple(flat))

    def ball_walls(self, radius: int) -> tuple[Root, ...]:
        """Positive roots of all walls dual to an edge met by the ball."""
        walls = set()
        for g in self.ball(radius):
            for s in range(self.rank):
                walls.add(self.act_word(g.word, self.simple_roots[s]).abs())
        return tuple(sorted(walls, key=self.root_sort_key))

    # -- root depth -------------------------------------------------------------

    def root_depth(self, root: Root) -> int:
        """Depth of a positive root: minimal length of w with w(root) negative.

        The vertex-to-wall distance in the Cayley graph is depth - 1.
        """
        root = root.abs()
        cached = self._root_depth.get(root)
        if cached is not None:
            return cached
        chain = []
        current = root
        while current not in self._root_depth:
            if current in self._simple_set:
                self._root_depth[current] = 1
                break
            for s in range(self.rank):
                if self.bilinear(self.simple_roots[s], current).sign() > 0:
                    chain.append(current)
                    current = self.reflect(s, current)
                    break
            else:
                raise InternalInconsistencyError(
                    f"positive root with no descent direction: {current}"
                )
        base = self._root_depth[current]
        for r in reversed(chain):
            base += 1
            self._root_depth[r] = base
        return self._root_depth[root]

    def root_sort_key(self, root: Root):
        """Deterministic total order on roots: by depth, then coordinates."""
        return (self.root_depth(root), root.coeffs)

    def render_root(self, root: Root) -> str:
        parts = []
        for name, c in zip(self.generator_names, root.coeffs):
            if not c.is_zero():
                parts.append(f"{c!r}*a_{name}" if c != ONE else f"a_{name}")
        return " + ".join(parts) if parts else "0"


def make_system(
    generators: Sequence[str], labels: dict[tuple[str, str], int], name: str | None = None
) -> CoxeterSystem:
    """Convenience constructor: unlisted pairs default to label 2 (commuting)."""
    gens = tuple(generators)
    index = {g: i for i, g in enumerate(gens)}
    n = len(gens)
    entries = [[2] * n for _ in range(n)]
    for i in range(n):
        entries[i][i] = 1
    for (a, b), m in labels.items():
        i, j = index[a], index[b]
        entries[i][j] = m
        entries[j][i] = m
    return CoxeterSystem(CoxeterMatrix(gens, tuple(tuple(r) for r in entries), name))
