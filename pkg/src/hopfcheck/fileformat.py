"""The versioned instance file format: parse and serialize.

Text-based, section-headed, line-oriented, with exact scalar literals
(integers, fractions, residues). Fraction literals in prime-field files
resolve through the modular inverse, so one fixture source can serve several
fields. Serialization is canonical: fixed section order, ascending grade
indices, one matrix row per line. ``parse(serialize(b)) == b`` exactly.

Grammar (version 1)::

    file         : header section*
    header       : "[header]" "format = 1" "field = " fieldname
                   "order = " int "cayley" introws
    fieldname    : "Q" | "F" int
    introws      : one line of integers per group element
    section      : algebra | comultiplication | counit | antipode
                 | crossing | rmatrix | modules | metadata
    algebra      : "[algebra]" "dims = " ints  mublock*
    mublock      : "mu p=" int  scalarrows          ; d_p^2 rows of d_p entries
    comultiplication : "[comultiplication]" deltablock*
    deltablock   : "delta p=" int " q=" int  scalarrows
                                                    ; d_p*d_q rows of d_{pq} entries
    counit       : "[counit]" "eps = " scalars      ; d_e entries
    antipode     : "[antipode]" sblock*
    sblock       : "s p=" int  scalarrows           ; d_{p^-1} rows of d_p entries
    crossing     : "[crossing]" ["rho" introws] piblock*
    piblock      : "pi q=" int " p=" int " -> " int  scalarrows
    rmatrix      : "[rmatrix]" rline*
    rline        : "r p=" int " q=" int " = " scalars
    modules      : "[modules]" moduleblock*
    moduleblock  : "module " name "dims = " ints gammablock* pimblock* "endmodule"
    gammablock   : "gamma p=" int " i=" int  scalarrows
    pimblock     : "pim q=" int " p=" int " -> " int  scalarrows
    metadata     : "[metadata]" (key " = " value)*

Comment lines start with ``#``; blank lines are ignored. Unknown sections are
rejected with the offending line number.
"""

from __future__ import annotations

from .algebra import ComponentAlgebra, GradedAlgebra
from .crossing import Crossing, RMatrix
from .fields import Field
from .groups import validate_group
from .hopf import Antipode, Comultiplication
from .instances import InstanceBundle
from .linalg import Matrix, Vector
from .modules import AGModule, CrossedModule, ModuleCrossing

FORMAT_VERSION = 1

_SECTIONS = (
    "header",
    "algebra",
    "comultiplication",
    "counit",
    "antipode",
    "crossing",
    "rmatrix",
    "modules",
    "metadata",
)


class ParseError(ValueError):
    """Syntax or consistency error, carrying the 1-based line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class _Reader:
    def __init__(self, text: str) -> None:
        self.lines = text.splitlines()
        self.pos = 0

    def peek(self) -> str | None:
        while self.pos < len(self.lines):
            stripped = self.lines[self.pos].strip()
            if stripped and not stripped.startswith("#"):
                return stripped
            self.pos += 1
        return None

    def next(self) -> tuple[int, str]:
        line = self.peek()
        if line is None:
            raise ParseError(len(self.lines) or 1, "unexpected end of file")
        self.pos += 1
        return self.pos, line

    @property
    def line_no(self) -> int:
        return self.pos


def _expect_kv(reader: _Reader, key: str) -> str:
    no, line = reader.next()
    prefix = f"{key} ="
    if not line.startswith(prefix):
        raise ParseError(no, f"expected '{key} = ...', got {line!r}")
    return line[len(prefix):].strip()


def _parse_ints(no: int, text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise ParseError(no, f"expected integers, got {text!r}") from None


def _parse_scalars(no: int, text: str, field: Field) -> Vector:
    try:
        return tuple(field.parse(tok) for tok in text.split())
    except Exception as exc:
        raise ParseError(no, str(exc)) from None


def _read_matrix(reader: _Reader, field: Field, nrows: int, ncols: int, what: str) -> Matrix:
    rows = []
    for _ in range(nrows):
        no, line = reader.next()
        row = _parse_scalars(no, line, field)
        if len(row) != ncols:
            raise ParseError(no, f"{what}: expected {ncols} entries per row, got {len(row)}")
        rows.append(row)
    return Matrix(field, nrows, ncols, tuple(rows))


def parse_instance(text: str) -> InstanceBundle:
    """Parse and structurally validate a serialized bundle."""
    reader = _Reader(text)
    no, line = reader.next()
    if line != "[header]":
        raise ParseError(no, f"expected [header], got {line!r}")
    version = _expect_kv(reader, "format")
    if version != str(FORMAT_VERSION):
        raise ParseError(reader.line_no, f"unsupported format version {version!r}")
    field = Field.from_name(_expect_kv(reader, "field"))
    no2 = reader.line_no
    order_text = _expect_kv(reader, "order")
    order = _parse_ints(no2 + 1, order_text)[0]
    no3, cayley_head = reader.next()
    if cayley_head != "cayley":
        raise ParseError(no3, f"expected 'cayley', got {cayley_head!r}")
    cayley = []
    for _ in range(order):
        no4, row_text = reader.next()
        row = _parse_ints(no4, row_text)
        if len(row) != order:
            raise ParseError(no4, f"cayley row has {len(row)} entries, expected {order}")
        cayley.append(row)
    try:
        group = validate_group(cayley)
    except ValueError as exc:
        raise ParseError(reader.line_no, f"invalid group table: {exc}") from None

    dims: list[int] | None = None
    algebra: GradedAlgebra | None = None
    delta: Comultiplication | None = None
    counit: Vector | None = None
    antipode: Antipode | None = None
    crossing: Crossing | None = None
    rmatrix: RMatrix | None = None
    modules: list[CrossedModule] = []
    metadata: list[tuple[str, str]] = []

    while True:
        head = reader.peek()
        if head is None:
            break
        no, line = reader.next()
        if not (line.startswith("[") and line.endswith("]")):
            raise ParseError(no, f"expected a section header, got {line!r}")
        section = line[1:-1]
        if section not in _SECTIONS:
            raise ParseError(no, f"unknown section [{section}]")
        if section == "algebra":
            dims = _parse_ints(reader.line_no + 1, _expect_kv(reader, "dims"))
            if len(dims) != order:
                raise ParseError(reader.line_no, f"{len(dims)} dimensions for a group of order {order}")
            comps = []
            for p in group.elements():
                no5, mu_head = reader.next()
                if mu_head != f"mu p={p}":
                    raise ParseError(no5, f"expected 'mu p={p}', got {mu_head!r}")
                d = dims[p]
                table = _read_matrix(reader, field, d * d, d, f"mu p={p}")
                left = tuple(
                    Matrix.from_cols(field, [table.row(i * d + j) for j in range(d)], d)
                    for i in range(d)
                )
                comps.append(ComponentAlgebra(field, left, label=f"A{p}"))
            algebra = GradedAlgebra(group, field, tuple(comps))
        elif section == "comultiplication":
            algebra = _need(algebra, no, "algebra")
            maps = []
            for p in group.elements():
                row = []
                for q in group.elements():
                    no6, head_line = reader.next()
                    if head_line != f"delta p={p} q={q}":
                        raise ParseError(no6, f"expected 'delta p={p} q={q}', got {head_line!r}")
                    src = group.mul(p, q)
                    row.append(
                        _read_matrix(
                            reader, field, algebra.dim(p) * algebra.dim(q), algebra.dim(src),
                            f"delta p={p} q={q}",
                        )
                    )
                maps.append(tuple(row))
            delta = Comultiplication(algebra, tuple(maps))
        elif section == "counit":
            algebra = _need(algebra, no, "algebra")
            no7 = reader.line_no
            counit = _parse_scalars(no7 + 1, _expect_kv(reader, "eps"), field)
            if len(counit) != algebra.dim(group.identity):
                raise ParseError(no7 + 1, f"counit has {len(counit)} entries, unit component has {algebra.dim(group.identity)}")
        elif section == "antipode":
            algebra = _need(algebra, no, "algebra")
            maps_s = []
            for p in group.elements():
                no8, head_line = reader.next()
                if head_line != f"s p={p}":
                    raise ParseError(no8, f"expected 's p={p}', got {head_line!r}")
                maps_s.append(
                    _read_matrix(reader, field, algebra.dim(group.inv(p)), algebra.dim(p), f"s p={p}")
                )
            antipode = Antipode(algebra, tuple(maps_s))
        elif section == "crossing":
            algebra = _need(algebra, no, "algebra")
            rho = None
            if reader.peek() == "rho":
                reader.next()
                rho_rows = []
                for _ in range(order):
                    no9, row_text = reader.next()
                    row = _parse_ints(no9, row_text)
                    if len(row) != order:
                        raise ParseError(no9, f"rho row has {len(row)} entries, expected {order}")
                    rho_rows.append(tuple(row))
                rho = tuple(rho_rows)
            blocks = []
            for q in group.elements():
                row_blocks = []
                for p in group.elements():
                    no10, head_line = reader.next()
                    prefix = f"pi q={q} p={p} -> "
                    if not head_line.startswith(prefix):
                        raise ParseError(no10, f"expected '{prefix}<target>', got {head_line!r}")
                    target = _parse_ints(no10, head_line[len(prefix):])[0]
                    if not 0 <= target < order:
                        raise ParseError(no10, f"target grade {target} out of range")
                    mat = _read_matrix(
                        reader, field, algebra.dim(target), algebra.dim(p), f"pi q={q} p={p}"
                    )
                    row_blocks.append((target, mat))
                blocks.append(tuple(row_blocks))
            crossing = Crossing(algebra, tuple(blocks), rho)
        elif section == "rmatrix":
            algebra = _need(algebra, no, "algebra")
            comps_r = []
            for p in group.elements():
                row = []
                for q in group.elements():
                    no11, line_r = reader.next()
                    prefix = f"r p={p} q={q} ="
                    if not line_r.startswith(prefix):
                        raise ParseError(no11, f"expected '{prefix} ...', got {line_r!r}")
                    vec = _parse_scalars(no11, line_r[len(prefix):], field)
                    if len(vec) != algebra.dim(p) * algebra.dim(q):
                        raise ParseError(
                            no11,
                            f"r p={p} q={q} has {len(vec)} entries, expected {algebra.dim(p) * algebra.dim(q)}",
                        )
                    row.append(vec)
                comps_r.append(tuple(row))
            rmatrix = RMatrix(algebra, tuple(comps_r))
        elif section == "modules":
            algebra = _need(algebra, no, "algebra")
            while reader.peek() is not None and reader.peek().startswith("module "):
                modules.append(_parse_module(reader, field, algebra))
        elif section == "metadata":
            while True:
                head2 = reader.peek()
                if head2 is None or head2.startswith("["):
                    break
                no12, kv = reader.next()
                key, sep, value = kv.partition(" = ")
                if not sep:
                    raise ParseError(no12, f"expected 'key = value', got {kv!r}")
                metadata.append((key, value))
        elif section == "header":
            raise ParseError(no, "duplicate [header] section")

    if algebra is None or delta is None:
        raise ParseError(reader.line_no or 1, "file must contain [algebra] and [comultiplication]")
    if crossing is None:
        crossing = Crossing.identity(algebra)
    return InstanceBundle(
        algebra, delta, counit, antipode, crossing, rmatrix, tuple(modules), tuple(metadata)
    )


def _parse_module(reader: _Reader, field: Field, algebra: GradedAlgebra) -> CrossedModule:
    group = algebra.group
    no, head = reader.next()
    name = head[len("module "):].strip()
    if not name:
        raise ParseError(no, "module needs a name")
    dims = _parse_ints(reader.line_no + 1, _expect_kv(reader, "dims"))
    if len(dims) != group.order:
        raise ParseError(reader.line_no, f"{len(dims)} module dimensions for a group of order {group.order}")
    actions = []
    for p in group.elements():
        mats = []
        for i in range(algebra.dim(p)):
            no13, head_line = reader.next()
            if head_line != f"gamma p={p} i={i}":
                raise ParseError(no13, f"expected 'gamma p={p} i={i}', got {head_line!r}")
            mats.append(_read_matrix(reader, field, dims[p], dims[p], f"gamma p={p} i={i}"))
        actions.append(tuple(mats))
    blocks = []
    for q in group.elements():
        row = []
        for p in group.elements():
            no14, head_line = reader.next()
            prefix = f"pim q={q} p={p} -> "
            if not head_line.startswith(prefix):
                raise ParseError(no14, f"expected '{prefix}<target>', got {head_line!r}")
            target = _parse_ints(no14, head_line[len(prefix):])[0]
            mat = _read_matrix(reader, field, dims[target], dims[p], f"pim q={q} p={p}")
            row.append((target, mat))
        blocks.append(tuple(row))
    no15, tail = reader.next()
    if tail != "endmodule":
        raise ParseError(no15, f"expected 'endmodule', got {tail!r}")
    module = AGModule(algebra, tuple(dims), tuple(actions))
    return CrossedModule(name, module, ModuleCrossing(algebra, tuple(blocks)))


def _need(value, line_no: int, section: str):
    if value is None:
        raise ParseError(line_no, f"section requires [{section}] first")
    return value


# -- serialization ----------------------------------------------------------------


def serialize_instance(bundle: InstanceBundle) -> str:
    """Canonical text form; deterministic for identical bundles."""
    field = bundle.field
    group = bundle.group
    algebra = bundle.algebra
    out: list[str] = []

    def fmt_row(row: Vector) -> str:
        return " ".join(field.format(x) for x in row)

    out.append("[header]")
    out.append(f"format = {FORMAT_VERSION}")
    out.append(f"field = {field.name}")
    out.append(f"order = {group.order}")
    out.append("cayley")
    for row in group.cayley:
        out.append(" ".join(str(x) for x in row))
    out.append("")

    out.append("[algebra]")
    out.append("dims = " + " ".join(str(d) for d in algebra.dims))
    for p in group.elements():
        out.append(f"mu p={p}")
        comp = algebra.component(p)
        for i in range(comp.dim):
            for j in range(comp.dim):
                out.append(fmt_row(comp.basis_product(i, j)))
    out.append("")

    out.append("[comultiplication]")
    for p in group.elements():
        for q in group.elements():
            out.append(f"delta p={p} q={q}")
            for row in bundle.delta.component(p, q).rows:
                out.append(fmt_row(row))
    out.append("")

    if bundle.counit is not None:
        out.append("[counit]")
        out.append("eps = " + fmt_row(bundle.counit))
        out.append("")

    if bundle.antipode is not None:
        out.append("[antipode]")
        for p in group.elements():
            out.append(f"s p={p}")
            for row in bundle.antipode.component(p).rows:
                out.append(fmt_row(row))
        out.append("")

    out.append("[crossing]")
    if bundle.crossing.rho is not None:
        out.append("rho")
        for row in bundle.crossing.rho:
            out.append(" ".join(str(x) for x in row))
    for q in group.elements():
        for p in group.elements():
            target, mat = bundle.crossing.block(q, p)
            out.append(f"pi q={q} p={p} -> {target}")
            for row in mat.rows:
                out.append(fmt_row(row))
    out.append("")

    if bundle.rmatrix is not None:
        out.append("[rmatrix]")
        for p in group.elements():
            for q in group.elements():
                out.append(f"r p={p} q={q} = " + fmt_row(bundle.rmatrix.component(p, q)))
        out.append("")

    if bundle.modules:
        out.append("[modules]")
        for cm in bundle.modules:
            out.append(f"module {cm.name}")
            out.append("dims = " + " ".join(str(d) for d in cm.module.dims))
            for p in group.elements():
                for i in range(algebra.dim(p)):
                    out.append(f"gamma p={p} i={i}")
                    for row in cm.module.action(p, i).rows:
                        out.append(fmt_row(row))
            for q in group.elements():
                for p in group.elements():
                    target, mat = cm.crossing.block(q, p)
                    out.append(f"pim q={q} p={p} -> {target}")
                    for row in mat.rows:
                        out.append(fmt_row(row))
            out.append("endmodule")
        out.append("")

    if bundle.metadata:
        out.append("[metadata]")
        for key, value in bundle.metadata:
            out.append(f"{key} = {value}")
        out.append("")

    return "\n".join(out)
