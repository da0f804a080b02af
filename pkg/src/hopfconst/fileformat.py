"""Line-oriented text format for presentations, i-algebras and matrices.

Grammar (one record per line; ``#`` starts a comment line; blank lines are ignored)::

    file     := header kind field dim record*
    header   := "hopfconst" SP version            (version is 1)
    kind     := "kind" SP ("bialgebra" | "ialgebra" | "matrix")
    field    := "field" SP ("rational" | "prime" SP P | "cyclotomic" SP N)
    dim      := "dim" SP N
    record   := "label" SP I " = " TEXT
              | "lambda" SP I " = " SCALAR          (dense: every I exactly once)
              | "mu" SP I " = " SCALAR              (dense; bialgebra only)
              | "F" SP I SP J SP K " = " SCALAR     (sparse: unlisted entries are 0)
              | "G" SP I SP J SP K " = " SCALAR     (sparse; bialgebra only)
              | "antipode" SP I SP J " = " SCALAR   (sparse; row I, column J)
              | "witness" SP NAME SP I SP J " = " SCALAR
              | "M" SP I SP J " = " SCALAR          (sparse; matrix files only)
              | "note = " TEXT
    SCALAR   := rational "a" | "a/b"  |  residue (prime fields)
              | "[c0, ..., c_{d-1}] @ zeta(N)"   (cyclotomic, d = phi(N))

Indices are 1-based.  The canonical writer emits records in the order above with
tensor and matrix entries sorted by index, so writing a loaded canonical file
reproduces it byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Optional, Union

from .duality import DualityWitness
from .errors import FieldMismatchError, HopfError, ParseError
from .ihopf import IAlgebra
from .linalg import Matrix
from .presentation import BialgebraPresentation, StructureTensor
from .scalars import Field, field_from_text

FORMAT_VERSION = 1
KINDS = ("bialgebra", "ialgebra", "matrix")


@dataclass
class PresentationFile:
    kind: str
    field: Field
    dim: int
    labels: Optional[tuple[str, ...]] = None
    F: Optional[StructureTensor] = None
    G: Optional[StructureTensor] = None
    lam: Optional[tuple] = None
    mu: Optional[tuple] = None
    antipode: Optional[Matrix] = None
    witnesses: dict[str, Matrix] = dc_field(default_factory=dict)
    matrix: Optional[Matrix] = None
    note: Optional[str] = None

    def presentation(self) -> BialgebraPresentation:
        if self.kind != "bialgebra":
            raise HopfError(f"file holds a {self.kind}, not a bialgebra presentation")
        return BialgebraPresentation(self.labels, self.F, self.G, self.lam, self.mu, self.antipode)

    def ialgebra(self) -> IAlgebra:
        if self.kind not in ("ialgebra", "bialgebra"):
            raise HopfError(f"file holds a {self.kind}, not an algebra")
        return IAlgebra(self.labels, self.F, self.lam, self.note or "")

    def witness(self, name: str) -> DualityWitness:
        if name not in self.witnesses:
            known = ", ".join(sorted(self.witnesses)) or "none"
            raise HopfError(f"no witness named {name!r} (available: {known})")
        return DualityWitness(self.witnesses[name])


# --------------------------------------------------------------------------- writing


def _matrix_lines(prefix: str, M: Matrix) -> list[str]:
    lines = []
    for i, row in enumerate(M):
        for j, x in enumerate(row):
            if x:
                lines.append(f"{prefix} {i + 1} {j + 1} = {x.to_text()}")
    return lines


def _check_text(value: str, what: str) -> str:
    if "\n" in value or value != value.strip():
        raise HopfError(f"{what} must be a single line without surrounding whitespace: {value!r}")
    return value


def _as_file(obj, witnesses=None, note=None) -> PresentationFile:
    if isinstance(obj, PresentationFile):
        doc = obj
    elif isinstance(obj, BialgebraPresentation):
        doc = PresentationFile(
            "bialgebra", obj.field, obj.dim, obj.labels, obj.F, obj.G, obj.lam, obj.mu, obj.antipode
        )
    elif isinstance(obj, IAlgebra):
        doc = PresentationFile(
            "ialgebra", obj.field, obj.dim, obj.labels, obj.F, lam=obj.lam, note=obj.provenance or None
        )
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    if witnesses:
        doc.witnesses = {**doc.witnesses, **{
            k: (w.S if isinstance(w, DualityWitness) else w) for k, w in witnesses.items()
        }}
    if note is not None:
        doc.note = note
    return doc


def dumps(obj, witnesses=None, note=None) -> str:
    """Canonical text for a presentation, an :class:`IAlgebra` or a :class:`PresentationFile`."""
    doc = _as_file(obj, witnesses, note)
    lines = [
        f"hopfconst {FORMAT_VERSION}",
        f"kind {doc.kind}",
        f"field {doc.field}",
        f"dim {doc.dim}",
    ]
    if doc.kind == "matrix":
        lines += _matrix_lines("M", doc.matrix)
    else:
        lines += [f"label {i + 1} = {_check_text(lab, 'label')}" for i, lab in enumerate(doc.labels)]
        lines += [f"lambda {i + 1} = {x.to_text()}" for i, x in enumerate(doc.lam)]
        if doc.kind == "bialgebra":
            lines += [f"mu {i + 1} = {x.to_text()}" for i, x in enumerate(doc.mu)]
        lines += [f"F {i + 1} {j + 1} {k + 1} = {x.to_text()}" for (i, j, k), x in doc.F.items()]
        if doc.kind == "bialgebra":
            lines += [f"G {i + 1} {j + 1} {k + 1} = {x.to_text()}" for (i, j, k), x in doc.G.items()]
        if doc.antipode is not None:
            lines += _matrix_lines("antipode", doc.antipode)
        for name in sorted(doc.witnesses):
            if not name or any(c.isspace() for c in name):
                raise HopfError(f"bad witness name {name!r}")
            lines += _matrix_lines(f"witness {name}", doc.witnesses[name])
    if doc.note:
        lines.append(f"note = {_check_text(doc.note, 'note')}")
    return "\n".join(lines) + "\n"


def save(obj, path: Union[str, Path], witnesses=None, note=None) -> None:
    Path(path).write_text(dumps(obj, witnesses, note), encoding="utf-8")


def dumps_matrix(M: Matrix) -> str:
    return dumps(PresentationFile("matrix", M[0][0].field, len(M), matrix=M))


# --------------------------------------------------------------------------- reading


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.kind = None
        self.field = None
        self.dim = None
        self.labels: dict[int, str] = {}
        self.vectors: dict[str, dict[int, object]] = {"lambda": {}, "mu": {}}
        self.tensors: dict[str, dict] = {"F": {}, "G": {}}
        self.matrices: dict[str, dict] = {}
        self.note = None
        self.seen_antipode = False

    def fail(self, msg, lineno, col=None):
        raise ParseError(msg, lineno, col)

    def index(self, token: str, lineno: int, col: int) -> int:
        if not token.isdigit():
            self.fail(f"expected a positive index, got {token!r}", lineno, col)
        i = int(token)
        if not 1 <= i <= self.dim:
            self.fail(f"index {i} out of range 1..{self.dim}", lineno, col)
        return i - 1

    def scalar(self, text: str, lineno: int, col: int):
        try:
            return self.field.parse(text)
        except FieldMismatchError as exc:
            self.fail(f"field mismatch: {exc}", lineno, col)
        except (ParseError, ZeroDivisionError, ValueError) as exc:
            msg = str(exc.args[0]) if isinstance(exc, ParseError) and exc.args else str(exc)
            self.fail(f"bad scalar: {msg}", lineno, col)

    def run(self) -> PresentationFile:
        header_done = False
        for lineno, raw in enumerate(self.text.splitlines(), start=1):
            line = raw.rstrip()
            if not line or line.lstrip().startswith("#"):
                continue
            if not header_done:
                parts = line.split()
                if len(parts) != 2 or parts[0] != "hopfconst":
                    self.fail("expected header 'hopfconst <version>'", lineno, 1)
                if parts[1] != str(FORMAT_VERSION):
                    self.fail(f"unsupported format version {parts[1]!r}", lineno, len(parts[0]) + 2)
                header_done = True
                continue
            self.record(line, lineno)
        if not header_done:
            raise ParseError("empty file")
        return self.finish()

    def record(self, line: str, lineno: int):
        if "=" in line:
            eq = line.index("=")
            head, value = line[:eq].split(), line[eq + 1:].strip()
            vcol = eq + 2 + (len(line[eq + 1:]) - len(line[eq + 1:].lstrip()))
        else:
            head, value, vcol = line.split(), None, None
        key = head[0]
        if key in ("kind", "field", "dim"):
            if value is not None or len(head) < 2:
                self.fail(f"malformed {key} record", lineno, 1)
            arg = line.split(None, 1)[1].strip()
            if key == "kind":
                if self.kind is not None or arg not in KINDS:
                    self.fail(f"bad or repeated kind {arg!r}", lineno, 6)
                self.kind = arg
            elif key == "field":
                if self.field is not None:
                    self.fail("repeated field record", lineno, 1)
                try:
                    self.field = field_from_text(arg)
                except HopfError as exc:
                    self.fail(str(exc), lineno, 7)
            else:
                if self.dim is not None or not arg.isdigit() or int(arg) < 1:
                    self.fail(f"bad or repeated dim {arg!r}", lineno, 5)
                self.dim = int(arg)
            return
        if self.kind is None or self.field is None or self.dim is None:
            self.fail("kind, field and dim must precede all other records", lineno, 1)
        if value is None:
            self.fail(f"record {key!r} needs ' = value'", lineno, len(line) + 1)
        if key == "note":
            if len(head) != 1 or self.note is not None:
                self.fail("malformed or repeated note", lineno, 1)
            self.note = value
            return
        cols = _token_columns(line)
        if key == "label":
            self._expect(head, 2, lineno)
            i = self.index(head[1], lineno, cols[1])
            self._put(self.labels, i, value, lineno)
        elif key in ("lambda", "mu"):
            self._expect(head, 2, lineno)
            i = self.index(head[1], lineno, cols[1])
            self._put(self.vectors[key], i, self.scalar(value, lineno, vcol), lineno)
        elif key in ("F", "G"):
            self._expect(head, 4, lineno)
            idx = tuple(self.index(head[m], lineno, cols[m]) for m in (1, 2, 3))
            self._put(self.tensors[key], idx, self.scalar(value, lineno, vcol), lineno)
        elif key in ("antipode", "M"):
            self._expect(head, 3, lineno)
            idx = tuple(self.index(head[m], lineno, cols[m]) for m in (1, 2))
            self._put(self.matrices.setdefault(key, {}), idx, self.scalar(value, lineno, vcol), lineno)
        elif key == "witness":
            self._expect(head, 4, lineno)
            idx = tuple(self.index(head[m], lineno, cols[m]) for m in (2, 3))
            self._put(
                self.matrices.setdefault("witness " + head[1], {}),
                idx,
                self.scalar(value, lineno, vcol),
                lineno,
            )
        else:
            self.fail(f"unknown record {key!r}", lineno, 1)

    def _expect(self, head, n, lineno):
        if len(head) != n:
            self.fail(f"record {head[0]!r} takes {n - 1} argument(s)", lineno, 1)

    def _put(self, store: dict, key, value, lineno):
        if key in store:
            self.fail(f"duplicate entry {key}", lineno, 1)
        store[key] = value

    def _dense_matrix(self, entries: dict) -> Matrix:
        zero = self.field.zero
        n = self.dim
        return tuple(tuple(entries.get((i, j), zero) for j in range(n)) for i in range(n))

    def _dense_vector(self, name: str) -> tuple:
        vec = self.vectors[name]
        missing = [i + 1 for i in range(self.dim) if i not in vec]
        if missing:
            raise ParseError(f"{name} is missing entries {missing}")
        return tuple(vec[i] for i in range(self.dim))

    def finish(self) -> PresentationFile:
        if self.kind is None or self.field is None or self.dim is None:
            raise ParseError("file lacks kind, field or dim")
        doc = PresentationFile(self.kind, self.field, self.dim, note=self.note)
        if self.kind == "matrix":
            extra = set(self.matrices) - {"M"}
            if self.labels or extra or any(self.tensors.values()) or any(self.vectors.values()):
                raise ParseError("matrix files hold only M records")
            doc.matrix = self._dense_matrix(self.matrices.get("M", {}))
            return doc
        if "M" in self.matrices:
            raise ParseError("M records are only allowed in matrix files")
        missing = [i + 1 for i in range(self.dim) if i not in self.labels]
        if missing:
            raise ParseError(f"labels missing for indices {missing}")
        doc.labels = tuple(self.labels[i] for i in range(self.dim))
        doc.lam = self._dense_vector("lambda")
        doc.F = StructureTensor(self.field, self.dim, self.tensors["F"])
        if self.kind == "bialgebra":
            doc.mu = self._dense_vector("mu")
            doc.G = StructureTensor(self.field, self.dim, self.tensors["G"])
        elif self.vectors["mu"] or self.tensors["G"]:
            raise ParseError("i-algebra files carry no mu or G records")
        if "antipode" in self.matrices:
            doc.antipode = self._dense_matrix(self.matrices["antipode"])
        for key, entries in self.matrices.items():
            if key.startswith("witness "):
                doc.witnesses[key[len("witness "):]] = self._dense_matrix(entries)
        return doc


def _token_columns(line: str) -> list[int]:
    cols, pos = [], 0
    for tok in line.split("=", 1)[0].split():
        pos = line.index(tok, pos)
        cols.append(pos + 1)
        pos += len(tok)
    return cols


def loads(text: str) -> PresentationFile:
    return _Reader(text).run()


def load(path: Union[str, Path]) -> PresentationFile:
    return loads(Path(path).read_text(encoding="utf-8"))


def load_matrix(path: Union[str, Path]) -> Matrix:
    doc = load(path)
    if doc.kind != "matrix":
        raise ParseError(f"{path}: expected a matrix file, found kind {doc.kind}")
    return doc.matrix
