"""Linear block codes, polyalphabetic codes, and nested code chains.

Vectors are tuples of serialized field elements (see :mod:`.field`), so
they hash and compare structurally.  Distance computations are exact
exhaustive scans guarded by explicit limits; exceeding a limit raises
:class:`~whmetric.errors.ExhaustionError` rather than approximating.
"""

from __future__ import annotations

from itertools import combinations, product

from .errors import ExhaustionError, ParameterError
from .field import Field, make_extension_field, make_prime_field

DEFAULT_EXHAUSTION_LIMIT = 1 << 22
SYNDROME_TABLE_LIMIT = 1 << 20

FAIL = None  # decoders signal failure with None


# -- vector and matrix helpers ---------------------------------------------


def vec_add(field, u, v):
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(field, u, v):
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_scale(field, c, u):
    if c == 0:
        return (0,) * len(u)
    if c == 1:
        return tuple(u)
    return tuple(field.mul(c, a) for a in u)


def vec_dot(field, u, v):
    out = 0
    for a, b in zip(u, v):
        if a and b:
            out = field.add(out, field.mul(a, b))
    return out


def hamming_weight(v):
    return sum(1 for x in v if x)


def hamming_distance(u, v):
    return sum(1 for a, b in zip(u, v) if a != b)


def row_reduce(field, rows):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pr = next((i for i in range(r, len(work)) if work[i][col]), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = field.inv(work[r][col])
        if inv != 1:
            work[r] = [field.mul(inv, x) for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return [tuple(w) for w in work[:r]], pivots


def _reduce_against(field, row, elim):
    """Eliminate ``row`` against normalized rows keyed by pivot column."""
    row = list(row)
    for col in range(len(row)):
        if row[col] and col in elim:
            f = row[col]
            piv = elim[col]
            row = [field.sub(x, field.mul(f, y)) for x, y in zip(row, piv)]
    return tuple(row)


def _leading_index(row):
    return next((i for i, x in enumerate(row) if x), None)


def independent_rows(field, rows):
    """Subset of the original rows spanning the same space, order preserved."""
    elim = {}
    keep = []
    for row in rows:
        red = _reduce_against(field, row, elim)
        lead = _leading_index(red)
        if lead is None:
            continue
        norm = tuple(field.mul(field.inv(red[lead]), x) for x in red)
        elim[lead] = norm
        keep.append(tuple(row))
    return keep


def kernel_basis(field, rows, ncols):
    """Basis of the right kernel {h : r . h = 0 for every row r}."""
    rref, pivots = row_reduce(field, rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        h = [0] * ncols
        h[f] = 1
        for i, p in enumerate(pivots):
            h[p] = field.neg(rref[i][f])
        basis.append(tuple(h))
    return basis


def solve_left(field, rows, target):
    """Solve y . rows = target; returns y or None if inconsistent/ambiguous."""
    nunk = len(rows)
    neq = len(target)
    aug = [[rows[j][i] for j in range(nunk)] + [target[i]] for i in range(neq)]
    rref, pivots = row_reduce(field, aug)
    for row in rref:
        if _leading_index(row) == nunk:
            return None  # inconsistent
    if len(pivots) < nunk:
        return None  # underdetermined
    y = [0] * nunk
    for i, p in enumerate(pivots):
        y[p] = rref[i][nunk]
    return tuple(y)


def _stream_combinations(field, rows, length):
    """Yield every linear combination of ``rows`` in lexicographic message order.

    Streams via an odometer over message digits with prefix partial sums,
    so each step costs one vector addition.
    """
    q = field.order
    k = len(rows)
    zero = (0,) * length
    yield zero
    if k == 0:
        return
    scaled = [[vec_scale(field, c, row) for c in range(q)] for row in rows]
    digits = [0] * k
    prefix = [zero] * (k + 1)
    while True:
        p = k - 1
        while p >= 0 and digits[p] == q - 1:
            digits[p] = 0
            p -= 1
        if p < 0:
            return
        digits[p] += 1
        prefix[p + 1] = vec_add(field, prefix[p], scaled[p][digits[p]])
        for i in range(p + 1, k):
            prefix[i + 1] = prefix[i]
        yield prefix[k]


# -- linear codes -----------------------------------------------------------


class LinearCode:
    """An [n, k] linear code over a field, given by spanning generator rows.

    Construction row-reduces the input, drops dependent rows, and records
    an information set (the pivot columns of the reduced form).
    """

    def __init__(self, field: Field, rows):
        if not isinstance(field, Field):
            raise ParameterError("first argument must be a Field")
        rows = [tuple(r) for r in rows]
        if not rows:
            raise ParameterError("generator matrix is empty")
        n = len(rows[0])
        if n < 1 or any(len(r) != n for r in rows):
            raise ParameterError("generator rows must be non-empty and equally long")
        for r in rows:
            for x in r:
                field.validate(x)
        keep = independent_rows(field, rows)
        if not keep:
            raise ParameterError("generator matrix has rank 0")
        self.field = field
        self.n = n
        self.generator = tuple(keep)
        self.k = len(keep)
        self.rref, self.pivots = row_reduce(field, keep)
        self._parity = None
        self._distance = None
        self._syndrome_table = None

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}] over {self.field!r})"

    @property
    def parity_rows(self):
        if self._parity is None:
            self._parity = tuple(kernel_basis(self.field, self.rref, self.n))
        return self._parity

    def encode(self, message):
        if len(message) != self.k:
            raise ParameterError(f"message length {len(message)} != dimension {self.k}")
        out = (0,) * self.n
        for c, row in zip(message, self.generator):
            self.field.validate(c)
            if c:
                out = vec_add(self.field, out, vec_scale(self.field, c, row))
        return out

    def syndrome(self, v):
        if len(v) != self.n:
            raise ParameterError(f"vector length {len(v)} != code length {self.n}")
        return tuple(vec_dot(self.field, v, h) for h in self.parity_rows)

    def contains(self, v):
        return not any(self.syndrome(v))

    def codewords(self):
        """All codewords, streamed in lexicographic message order."""
        return _stream_combinations(self.field, self.generator, self.n)

    def message_codeword_pairs(self):
        q = self.field.order
        for msg in product(range(q), repeat=self.k):
            yield msg, self.encode(msg)

    def min_distance(self, limit=DEFAULT_EXHAUSTION_LIMIT):
        """Exact minimum Hamming distance by exhaustive codeword scan."""
        if self._distance is not None:
            return self._distance
        count = self.field.order**self.k
        if count > limit:
            raise ExhaustionError(
                f"exhaustion refused: {count} codewords exceeds the limit {limit}"
            )
        best = self.n + 1
        for c in self.codewords():
            w = hamming_weight(c)
            if 0 < w < best:
                best = w
                if best == 1:
                    break
        self._distance = best
        return best

    # -- decoding ------------------------------------------------------

    def _build_syndrome_table(self, radius):
        table = {self.syndrome((0,) * self.n): (0,) * self.n}
        nonzero = range(1, self.field.order)
        for w in range(1, radius + 1):
            for positions in combinations(range(self.n), w):
                for values in product(nonzero, repeat=w):
                    e = [0] * self.n
                    for p, val in zip(positions, values):
                        e[p] = val
                    e = tuple(e)
                    s = self.syndrome(e)
                    old = table.get(s)
                    if old is None or e < old:
                        table[s] = e
        return table

    def bmd_decode(self, r):
        """Unique codeword within (d-1)//2 of r, else FAIL (None)."""
        if len(r) != self.n:
            raise ParameterError(f"vector length {len(r)} != code length {self.n}")
        radius = (self.min_distance() - 1) // 2
        if self.field.order ** (self.n - self.k) <= SYNDROME_TABLE_LIMIT:
            if self._syndrome_table is None:
                self._syndrome_table = self._build_syndrome_table(radius)
            e = self._syndrome_table.get(self.syndrome(r))
            if e is None:
                return FAIL
            return vec_sub(self.field, r, e)
        best, best_d = None, radius + 1
        for c in self.codewords():
            dist = hamming_distance(c, r)
            if dist < best_d:
                best, best_d = c, dist
                if dist == 0:
                    break
        return best

    def erasure_decode(self, r, erased):
        """Errors-and-erasures decoding: unique codeword agreeing with r
        outside ``erased`` whenever 2e + s < d, else FAIL."""
        if len(r) != self.n:
            raise ParameterError(f"vector length {len(r)} != code length {self.n}")
        erased = set(erased)
        if any(not 0 <= p < self.n for p in erased):
            raise ParameterError(f"erased positions {sorted(erased)} out of range")
        keep = [i for i in range(self.n) if i not in erased]
        return _erasures_core(
            self,
            keep_symbols=keep,
            n_symbols=self.n,
            s=len(erased),
            distance=self.min_distance(),
            symbol_of=lambda v, i: v[i],
            coords_of_symbol=lambda i: (i,),
            received=r,
        )

    # -- structure -----------------------------------------------------

    def systematic_generator(self):
        """Generator with the identity on the first k columns, if one exists."""
        if self.pivots == list(range(self.k)):
            return self.rref
        raise ParameterError("the first k positions are not an information set")

    def is_subcode_of(self, other: "LinearCode"):
        if self.n != other.n or self.field != other.field:
            return False
        return all(other.contains(row) for row in self.generator)


def _erasures_core(code, keep_symbols, n_symbols, s, distance, symbol_of, coords_of_symbol, received):
    """Shared errors-and-erasures logic for linear and polyalphabetic codes.

    ``keep_symbols`` are the non-erased symbol indices.  When the radius
    budget forces e = 0 the unique exact match is found by a linear
    solve; otherwise codewords are scanned exhaustively.
    """
    field = code.field
    if s >= distance:
        return FAIL
    e_max = (distance - 1 - s) // 2
    if e_max == 0:
        cols = [c for i in keep_symbols for c in coords_of_symbol(i)]
        rows = [tuple(row[c] for c in cols) for row in code.generator]
        target = tuple(received[c] for c in cols)
        msg = solve_left(field, rows, target)
        if msg is None:
            return FAIL
        return code.encode(msg)
    count = field.order**code.k
    if count > DEFAULT_EXHAUSTION_LIMIT:
        raise ExhaustionError(
            f"exhaustion refused: {count} codewords exceeds the limit {DEFAULT_EXHAUSTION_LIMIT}"
        )
    best, best_d, ties = None, n_symbols + 1, 0
    for c in code.codewords():
        dist = sum(1 for i in keep_symbols if symbol_of(c, i) != symbol_of(received, i))
        if dist < best_d:
            best, best_d, ties = c, dist, 1
        elif dist == best_d:
            ties += 1
    if best is not None and 2 * best_d + s < distance and ties == 1:
        return best
    return FAIL


# -- polyalphabetic codes ---------------------------------------------------


class PolyalphabeticCode:
    """An F_q-linear code whose coordinates group into symbols of given sizes.

    Distance counts symbols whose coordinate slice is nonzero; zero-width
    symbols are legal and never count as nonzero.
    """

    def __init__(self, field: Field, sizes, rows, distance_lower_bound=None):
        sizes = tuple(int(s) for s in sizes)
        if any(s < 0 for s in sizes):
            raise ParameterError("symbol sizes must be non-negative")
        total = sum(sizes)
        if total < 1:
            raise ParameterError("total length must be positive")
        rows = [tuple(r) for r in rows]
        if not rows or any(len(r) != total for r in rows):
            raise ParameterError(f"generator rows must all have length {total}")
        for r in rows:
            for x in r:
                field.validate(x)
        keep = independent_rows(field, rows)
        if not keep:
            raise ParameterError("generator matrix has rank 0")
        self.field = field
        self.sizes = sizes
        self.total_length = total
        self.generator = tuple(keep)
        self.k = len(keep)
        self.distance_lower_bound = distance_lower_bound
        self._distance = None
        offsets, start = [], 0
        for s in sizes:
            offsets.append((start, start + s))
            start += s
        self._offsets = tuple(offsets)

    def __repr__(self):
        return f"PolyalphabeticCode(sizes={self.sizes}, k={self.k})"

    @property
    def n_symbols(self):
        return len(self.sizes)

    def symbols(self, v):
        return tuple(tuple(v[lo:hi]) for lo, hi in self._offsets)

    def symbol(self, v, i):
        lo, hi = self._offsets[i]
        return tuple(v[lo:hi])

    def block_weight(self, v):
        return sum(1 for lo, hi in self._offsets if any(v[lo:hi]))

    def encode(self, message):
        if len(message) != self.k:
            raise ParameterError(f"message length {len(message)} != dimension {self.k}")
        out = (0,) * self.total_length
        for c, row in zip(message, self.generator):
            self.field.validate(c)
            if c:
                out = vec_add(self.field, out, vec_scale(self.field, c, row))
        return out

    def codewords(self):
        return _stream_combinations(self.field, self.generator, self.total_length)

    def min_block_distance(self, limit=DEFAULT_EXHAUSTION_LIMIT):
        """Exact minimum number of nonzero symbols over nonzero codewords."""
        if self._distance is not None:
            return self._distance
        count = self.field.order**self.k
        if count > limit:
            raise ExhaustionError(
                f"exhaustion refused: {count} codewords exceeds the limit {limit}"
            )
        best = self.n_symbols + 1
        first = True
        for c in self.codewords():
            if first:
                first = False  # zero codeword
                continue
            w = self.block_weight(c)
            if w < best:
                best = w
                if best <= 1:
                    break
        self._distance = best
        return best

    def erasure_decode(self, r, erased):
        """Errors-and-erasures decoding over symbols; 2e + s < d contract."""
        if len(r) != self.total_length:
            raise ParameterError(f"vector length {len(r)} != code length {self.total_length}")
        erased = set(erased)
        if any(not 0 <= p < self.n_symbols for p in erased):
            raise ParameterError(f"erased symbol positions {sorted(erased)} out of range")
        keep = [i for i in range(self.n_symbols) if i not in erased]
        return _erasures_core(
            self,
            keep_symbols=keep,
            n_symbols=self.n_symbols,
            s=len(erased),
            distance=self.min_block_distance(),
            symbol_of=lambda v, i: self.symbol(v, i),
            coords_of_symbol=lambda i: range(*self._offsets[i]),
            received=r,
        )


# -- nested chains ----------------------------------------------------------


class NestedChain:
    """A nested sequence of codes B_1 >= B_2 >= ... >= B_s (>= {0}) on one block.

    For each level j the chain fixes quotient representative rows: vectors
    of B_j that extend a basis of B_(j+1) to a basis of B_j.  They are
    computed deterministically (pivot order by column index) and shared by
    the quotient encoder and decoder.
    """

    def __init__(self, codes):
        codes = list(codes)
        if not codes:
            raise ParameterError("a chain needs at least one code")
        field = codes[0].field
        n = codes[0].n
        for j, c in enumerate(codes):
            if c.field != field or c.n != n:
                raise ParameterError(f"chain level {j + 1} disagrees on field or length")
        for j in range(len(codes) - 1):
            if not codes[j + 1].is_subcode_of(codes[j]):
                raise ParameterError(f"chain level {j + 2} is not a subcode of level {j + 1}")
        self.field = field
        self.n = n
        self.codes = tuple(codes)
        self.s = len(codes)
        quotient, sub_basis = [], []
        for j in range(self.s):
            sub_rows = list(codes[j + 1].rref) if j + 1 < self.s else []
            elim = {_leading_index(row): row for row in sub_rows}
            q_rows = []
            for row in codes[j].rref:
                red = _reduce_against(field, row, elim)
                lead = _leading_index(red)
                if lead is None:
                    continue
                norm = tuple(field.mul(field.inv(red[lead]), x) for x in red)
                elim[lead] = norm
                q_rows.append(norm)
            quotient.append(tuple(q_rows))
            sub_basis.append(tuple(sub_rows))
        self.quotient_rows = tuple(quotient)
        self.sub_basis = tuple(sub_basis)
        self.widths = tuple(len(q) for q in quotient)

    def __repr__(self):
        dims = "/".join(str(c.k) for c in self.codes)
        return f"NestedChain(n={self.n}, dims={dims})"

    def quotient_encode(self, level, message):
        """Fixed coset representative of the level's quotient for ``message``."""
        rows = self.quotient_rows[level]
        if len(message) != len(rows):
            raise ParameterError(
                f"level {level + 1} message length {len(message)} != width {len(rows)}"
            )
        out = (0,) * self.n
        for c, row in zip(message, rows):
            self.field.validate(c)
            if c:
                out = vec_add(self.field, out, vec_scale(self.field, c, row))
        return out

    def quotient_message(self, level, b):
        """Recover the level message from any b in B_level; inverse of
        quotient_encode modulo the next subcode."""
        if len(b) != self.n:
            raise ParameterError(f"vector length {len(b)} != block length {self.n}")
        rows = list(self.quotient_rows[level]) + list(self.sub_basis[level])
        if not rows:
            if any(b):
                raise ParameterError(f"vector is not in chain level {level + 1}")
            return ()
        y = solve_left(self.field, rows, tuple(b))
        if y is None:
            raise ParameterError(f"vector is not in chain level {level + 1}")
        return tuple(y[: len(self.quotient_rows[level])])


# -- code families and matrix files ----------------------------------------

NAMED_FAMILIES = ("repetition", "parity", "full", "hamming", "reed_solomon", "custom")


def named_code(family, field, n, k):
    """Canonical generator for a named family, as an [n, k] code."""
    family = str(family).lower()
    if family == "rs":
        family = "reed_solomon"
    if family not in NAMED_FAMILIES:
        raise ParameterError(f"unknown code family {family!r}; choose from {NAMED_FAMILIES}")
    if n < 1:
        raise ParameterError("length must be positive")
    if family == "custom":
        raise ParameterError(
            "custom codes are built from explicit rows (LinearCode) or a matrix file"
        )
    if family == "repetition":
        if k != 1:
            raise ParameterError(f"repetition code has dimension 1, got k={k}")
        return LinearCode(field, [(1,) * n])
    if family == "parity":
        if k != n - 1:
            raise ParameterError(f"parity-check code of length {n} has dimension {n - 1}")
        minus_one = field.neg(1)
        rows = []
        for i in range(n - 1):
            row = [0] * n
            row[i] = 1
            row[n - 1] = minus_one
            rows.append(tuple(row))
        return LinearCode(field, rows)
    if family == "full":
        if k != n:
            raise ParameterError(f"the full space of length {n} has dimension {n}")
        rows = []
        for i in range(n):
            row = [0] * n
            row[i] = 1
            rows.append(tuple(row))
        return LinearCode(field, rows)
    if family == "hamming":
        order = field.order
        r, length = 2, order + 1
        while length < n:
            r += 1
            length = (order**r - 1) // (order - 1)
        if length != n:
            raise ParameterError(f"no Hamming code of length {n} over a field of order {order}")
        if k != n - r:
            raise ParameterError(f"Hamming code of length {n} has dimension {n - r}")
        columns = []
        for v in range(1, order**r):
            digits = []
            x = v
            for _ in range(r):
                digits.append(x % order)
                x //= order
            if digits[next(i for i, d in enumerate(digits) if d)] == 1:
                columns.append(digits)
        check_rows = [tuple(col[i] for col in columns) for i in range(r)]
        return LinearCode(field, kernel_basis(field, check_rows, n))
    # reed_solomon
    if n > field.order:
        raise ParameterError(
            f"Reed-Solomon needs n <= field order, got n={n} over order {field.order}"
        )
    if not 1 <= k <= n:
        raise ParameterError(f"Reed-Solomon dimension must be in [1, {n}], got {k}")
    points = list(range(1, field.order)) + [0]
    points = points[:n]
    rows = [tuple(field.pow(p, j) for p in points) for j in range(k)]
    return LinearCode(field, rows)


def parse_matrix_text(text):
    """Parse the plain-text generator format.

    First line is ``q n k`` for prime fields or ``q m n k`` for extension
    fields, followed by k rows of n serialized elements.
    """
    tokens = text.split()
    if not tokens:
        raise ParameterError("matrix file is empty")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise ParameterError(f"matrix file has a non-integer token: {exc}") from None

    def shape_fits(header_len):
        header = values[:header_len]
        body_len = len(values) - header_len
        if header_len == 3:
            q, n, k = header
            m = 1
        else:
            q, m, n, k = header
        return body_len == n * k and n >= 1 and k >= 1 and m >= 1 and q >= 2

    header_len = next((h for h in (3, 4) if len(values) > h and shape_fits(h)), None)
    if header_len is None:
        raise ParameterError("matrix file does not match 'q n k' or 'q m n k' plus k rows")
    if header_len == 3:
        q, n, k = values[:3]
        m = 1
    else:
        q, m, n, k = values[:4]
    field = make_prime_field(q) if m == 1 else make_extension_field(q, m)
    body = values[header_len:]
    rows = [tuple(body[i * n : (i + 1) * n]) for i in range(k)]
    code = LinearCode(field, rows)
    if code.k != k:
        raise ParameterError(f"matrix declares dimension {k} but has rank {code.k}")
    return code


def load_matrix_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix_text(fh.read())


def format_matrix(code: LinearCode) -> str:
    field = code.field
    if field.m == 1:
        header = f"{field.q} {code.n} {code.k}"
    else:
        header = f"{field.q} {field.m} {code.n} {code.k}"
    lines = [header]
    for row in code.generator:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"
