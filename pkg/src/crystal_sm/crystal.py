"""GL_n crystals of tableaux, realised on words in the box crystal.

The canonical carrier is :class:`TensorElement`, a word ``b_1 (x) ... (x) b_N``
of boxes.  A :class:`Tableau` is read into a word column by column, right to
left and top to bottom (Far-Eastern reading), and every crystal operator on a
tableau is computed on that word and folded back.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .lattice import Cochar, Permutation, act_on_cochar, is_dominant

__all__ = [
    "TensorElement", "Tableau", "Signature", "Crystal",
    "signature", "epsilon", "phi", "e", "f", "weight",
    "fe_read", "fe_factorize", "from_columns", "weyl_act",
    "generate_crystal", "weight_space", "highest_tableau", "project_to_highest",
    "flat_to_tensor", "conjugate_shape",
]


@dataclass(frozen=True)
class TensorElement:
    n: int
    boxes: tuple[int, ...]

    def __post_init__(self) -> None:
        boxes = tuple(int(b) for b in self.boxes)
        if any(not 1 <= b <= self.n for b in boxes):
            raise ValueError(f"box entries must lie in 1..{self.n}: {boxes}")
        object.__setattr__(self, "boxes", boxes)

    def __len__(self) -> int:
        return len(self.boxes)

    def to_json(self) -> dict:
        return {"n": self.n, "boxes": list(self.boxes)}

    @classmethod
    def from_json(cls, obj: dict) -> TensorElement:
        return cls(obj["n"], tuple(obj["boxes"]))


def conjugate_shape(shape: Sequence[int]) -> tuple[int, ...]:
    """Column heights, left to right."""
    if not shape:
        return ()
    return tuple(sum(1 for r in shape if r > c) for c in range(shape[0]))


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows if len(r) > 0)
        object.__setattr__(self, "rows", rows)
        shape = [len(r) for r in rows]
        if any(a < b for a, b in zip(shape, shape[1:])):
            raise ValueError(f"row lengths must weakly decrease: {shape}")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        heights = conjugate_shape(self.shape)
        return [tuple(self.rows[r][c] for r in range(h)) for c, h in enumerate(heights)]

    def is_semistandard(self) -> bool:
        if any(not 1 <= x <= self.n for r in self.rows for x in r):
            return False
        if any(a > b for r in self.rows for a, b in zip(r, r[1:])):
            return False
        return all(a < b for col in self.columns() for a, b in zip(col, col[1:]))

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict, n: int) -> Tableau:
        tab = cls(tuple(tuple(r) for r in obj["rows"]), n)
        if "shape" in obj and list(obj["shape"]) != list(tab.shape):
            raise ValueError(f"shape {obj['shape']} does not match rows")
        return tab

    def __str__(self) -> str:
        return "/".join("".join(str(x) for x in r) for r in self.rows)


Element = Union[TensorElement, Tableau]


# -- Far-Eastern reading ---------------------------------------------------


def fe_factorize(tab: Tableau) -> tuple[tuple[int, ...], ...]:
    """Columns of ``tab`` as 0/1 indicator vectors, rightmost column first."""
    if not tab.is_semistandard():
        raise ValueError(f"not semistandard: {tab}")
    out = []
    for col in reversed(tab.columns()):
        vec = [0] * tab.n
        for x in col:
            vec[x - 1] = 1
        out.append(tuple(vec))
    return tuple(out)


def fe_read(tab: Tableau) -> TensorElement:
    if not tab.is_semistandard():
        raise ValueError(f"not semistandard: {tab}")
    boxes = [x for col in reversed(tab.columns()) for x in col]
    return TensorElement(tab.n, tuple(boxes))


def from_columns(boxes: Sequence[int], shape: Sequence[int], n: int) -> Tableau:
    """Inverse of :func:`fe_read` for a known shape (no semistandard check)."""
    heights = conjugate_shape(shape)
    if sum(heights) != len(boxes):
        raise ValueError(f"{len(boxes)} boxes do not fill shape {tuple(shape)}")
    rows: list[list[int]] = [[0] * r for r in shape if r > 0]
    pos = 0
    for c in range(len(heights) - 1, -1, -1):
        for r in range(heights[c]):
            rows[r][c] = boxes[pos]
            pos += 1
    return Tableau(tuple(tuple(r) for r in rows), n)


def flat_to_tensor(parts: Sequence[Sequence[int]]) -> TensorElement:
    """Concatenate 0/1 column vectors into a word, each column read top to bottom."""
    n = len(parts[0]) if parts else 0
    boxes = [i + 1 for vec in parts for i, v in enumerate(vec) if v]
    return TensorElement(n, tuple(boxes))


# -- signature rule --------------------------------------------------------


class Signature(NamedTuple):
    reduced: str
    epsilon: int
    phi: int
    e_target: Optional[int]
    f_target: Optional[int]
    word: str


def _signature(boxes: Sequence[int], i: int) -> Signature:
    word = []
    # unmatched '-' positions and the stack of open '+' positions
    minus: list[int] = []
    plus: list[int] = []
    for pos, x in enumerate(boxes):
        if x == i:
            word.append("+")
            plus.append(pos)
        elif x == i + 1:
            word.append("-")
            if plus:
                plus.pop()
            else:
                minus.append(pos)
    return Signature(
        reduced="-" * len(minus) + "+" * len(plus),
        epsilon=len(minus),
        phi=len(plus),
        e_target=minus[-1] if minus else None,
        f_target=plus[0] if plus else None,
        word="".join(word),
    )


def _check_index(n: int, i: int) -> None:
    if not 1 <= i < n:
        raise ValueError(f"simple index {i} out of range for n={n}")


def _word(t: Element) -> TensorElement:
    return fe_read(t) if isinstance(t, Tableau) else t


def signature(t: Element, i: int) -> Signature:
    tw = _word(t)
    _check_index(tw.n, i)
    return _signature(tw.boxes, i)


def epsilon(t: Element, i: int) -> int:
    return signature(t, i).epsilon


def phi(t: Element, i: int) -> int:
    return signature(t, i).phi


def _rebuild(t: Element, boxes: Sequence[int]) -> Element:
    if isinstance(t, Tableau):
        return from_columns(boxes, t.shape, t.n)
    return TensorElement(t.n, tuple(boxes))


def e(t: Element, i: int) -> Optional[Element]:
    sig = signature(t, i)
    if sig.e_target is None:
        return None
    boxes = list(_word(t).boxes)
    boxes[sig.e_target] = i
    return _rebuild(t, boxes)


def f(t: Element, i: int) -> Optional[Element]:
    sig = signature(t, i)
    if sig.f_target is None:
        return None
    boxes = list(_word(t).boxes)
    boxes[sig.f_target] = i + 1
    return _rebuild(t, boxes)


def weight(t: Element) -> Cochar:
    tw = _word(t)
    out = [0] * tw.n
    for x in tw.boxes:
        out[x - 1] += 1
    return tuple(out)


def weyl_act(w: Permutation, t: Element) -> Element:
    """Weyl group action: ``s_i`` is ``f_i^k`` (or ``e_i^{-k}``) with ``k = <chi_{i,i+1}, wt>``."""
    tw = _word(t)
    if w.n != tw.n:
        raise ValueError(f"rank mismatch: {w.n} vs {tw.n}")
    boxes = list(tw.boxes)
    for i in reversed(w.reduced_word):
        k = boxes.count(i) - boxes.count(i + 1)
        for _ in range(abs(k)):
            sig = _signature(boxes, i)
            if k > 0:
                boxes[sig.f_target] = i + 1
            else:
                boxes[sig.e_target] = i
    return _rebuild(t, boxes)


# -- highest weight crystals -----------------------------------------------


def highest_tableau(mu: Sequence[int]) -> Tableau:
    n = len(mu)
    return Tableau(tuple((r + 1,) * mu[r] for r in range(n) if mu[r] > 0), n)


@dataclass
class Crystal:
    """A finite crystal ``B_mu`` with its ``f``-edges."""

    mu: Cochar
    elements: list[Tableau]
    edges: list[tuple[int, int, int]] = field(default_factory=list)  # (from, to, i) for to = f_i(from)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, t: Tableau) -> bool:
        return t in self.index

    @property
    def n(self) -> int:
        return len(self.mu)

    @property
    def index(self) -> dict[Tableau, int]:
        return {t: k for k, t in enumerate(self.elements)}

    def to_json(self) -> dict:
        return {
            "mu": list(self.mu),
            "n": self.n,
            "nodes": [{"id": k, **t.to_json(), "wt": list(weight(t))} for k, t in enumerate(self.elements)],
            "edges": [{"from": a, "to": b, "i": i} for a, b, i in self.edges],
        }


def generate_crystal(mu: Sequence[int]) -> Crystal:
    """Close the highest weight tableau of shape ``mu`` under all ``f_i``."""
    mu = tuple(mu)
    if not is_dominant(mu) or (mu and mu[-1] < 0):
        raise ValueError(f"mu must be dominant with non-negative entries: {mu}")
    n = len(mu)
    shape = tuple(x for x in mu if x > 0)
    start = fe_read(highest_tableau(mu)).boxes
    seen = {start}
    queue = deque([start])
    raw_edges = []
    while queue:
        word = queue.popleft()
        for i in range(1, n):
            sig = _signature(word, i)
            if sig.f_target is None:
                continue
            nxt = list(word)
            nxt[sig.f_target] = i + 1
            nxt = tuple(nxt)
            raw_edges.append((word, nxt, i))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    tabs = {w: from_columns(w, shape, n) for w in seen}
    elements = sorted(tabs.values(), key=lambda t: [x for r in t.rows for x in r])
    idx = {t: k for k, t in enumerate(elements)}
    edges = sorted((idx[tabs[a]], idx[tabs[b]], i) for a, b, i in raw_edges)
    return Crystal(mu, elements, edges)


def weight_space(crystal: Union[Crystal, Iterable[Element]], lam: Sequence[int]) -> list:
    lam = tuple(lam)
    return [t for t in crystal if weight(t) == lam]


def project_to_highest(t: Element) -> tuple[Cochar, Tableau]:
    """Image of ``t`` under the projection of its connected component onto ``B_mu'``.

    Raises with ``e_i`` (smallest applicable ``i`` first) to the highest weight
    element, then replays the lowering path from the highest weight tableau.
    """
    tw = _word(t)
    boxes = list(tw.boxes)
    path = []
    while True:
        for i in range(1, tw.n):
            sig = _signature(boxes, i)
            if sig.e_target is not None:
                boxes[sig.e_target] = i
                path.append(i)
                break
        else:
            break
    top = [0] * tw.n
    for x in boxes:
        top[x - 1] += 1
    mu_prime = tuple(top)
    out: Element = highest_tableau(mu_prime)
    for i in reversed(path):
        out = f(out, i)
    return mu_prime, out
