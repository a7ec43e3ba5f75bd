# -*- coding: utf-8 -*-
"""
Graded Frobenius superalgebras given by structure constants.

Vectors are coordinate rows over the basis; a linear map is stored as the
matrix whose i-th row holds the coordinates of the image of ``b_i``, so
applying a map is ``vecmat(v, M)`` and ``M1`` followed by ``M2`` is
``matmul(M1, M2)``.
"""
import logging

from attr import attrib

from .decorators import cached_on, immutable
from .exceptions import (
    AlgebraMismatch,
    BadParams,
    DegenerateTrace,
    DimensionMismatch,
    GradingViolation,
    NakayamaInfiniteOrder,
    NakayamaNotDiagonalizable,
    NoUnit,
    NotAssociative,
    SingularMatrix,
    SpecError,
)
from .linalg import (
    identity,
    inverse,
    matmul,
    matrices_equal,
    nullspace,
    reduced_row_echelon,
    solve,
    sparse_to_dense,
    vecmat,
    zeros,
)
from .scalars import ONE, ZERO, as_scalar, lcm, root_of_unity
from .settings import get_settings
from .types import SparseElem, accumulate

log = logging.getLogger(__name__)


def _sign(exponent):
    return -1 if exponent % 2 else 1


@immutable(eq=False)
class FrobAlg(object):
    name = attrib()
    conductor = attrib()
    labels = attrib()
    degrees = attrib()
    parities = attrib()
    struct_consts = attrib(repr=False)
    products = attrib(repr=False)
    unit = attrib()
    trace_vec = attrib()
    gram = attrib(repr=False)
    dual = attrib(repr=False)
    nakayama = attrib(repr=False)
    nakayama_inverse = attrib(repr=False)
    theta = attrib()
    delta = attrib()
    eigenbasis = attrib(repr=False)
    _cache = attrib(factory=dict, init=False, repr=False)

    def __repr__(self):
        return "<FrobAlg {} dim={} theta={} delta={}>".format(
            self.name, self.dim, self.theta, self.delta)

    @property
    def dim(self):
        return len(self.labels)

    @property
    def unit_index(self):
        """Index of the basis element equal to 1, or None."""
        return self._unit_index()

    @cached_on('_cache')
    def _unit_index(self):
        support = [i for i, c in enumerate(self.unit) if c]
        if len(support) == 1 and self.unit[support[0]] == 1:
            return support[0]
        return None

    def index_of(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise BadParams("{} has no basis element {!r}".format(
                self.name, label))

    # elements

    def element(self, coords):
        if isinstance(coords, dict):
            return AlgElem(self, {int(k): as_scalar(c)
                                  for k, c in coords.items()})
        return AlgElem(self, {i: as_scalar(c) for i, c in enumerate(coords)})

    def basis_element(self, index):
        return AlgElem(self, {index: ONE})

    def basis(self):
        return [self.basis_element(i) for i in range(self.dim)]

    def one(self):
        return self.element(self.unit)

    def zero(self):
        return AlgElem.zero(self)

    def format_key(self, key):
        if key == self.unit_index:
            return []
        return [self.labels[key]]

    # multiplication

    def mul_terms(self, left, right):
        out = {}
        for i, a in left.items():
            row = self.products[i]
            for j, b in right.items():
                ab = a * b
                for k, c in row[j].items():
                    accumulate(out, k, ab * c)
        return out

    def multiply(self, u, v):
        return AlgElem(self, self.mul_terms(u.terms, v.terms))

    def mul_vectors(self, u, v):
        terms = self.mul_terms(_dense_to_terms(u), _dense_to_terms(v))
        return _terms_to_dense(terms, self.dim)

    # trace, duals, Nakayama

    def trace_terms(self, terms):
        total = ZERO
        for i, c in terms.items():
            if self.trace_vec[i]:
                total = total + c * self.trace_vec[i]
        return total

    @cached_on('_cache')
    def psi_matrix(self, power):
        power %= self.theta
        m = identity(self.dim)
        for _ in range(power):
            m = matmul(m, self.nakayama)
        return m

    @cached_on('_cache')
    def psi_terms(self, index, power):
        """psi^power(b_index) as a sparse dict."""
        return _dense_to_terms(self.psi_matrix(power)[index])

    def is_symmetric(self):
        return self.theta == 1

    def parity_of_terms(self, terms):
        parities = {self.parities[i] for i in terms}
        if len(parities) > 1:
            raise GradingViolation("element is not parity homogeneous")
        return parities.pop() if parities else 0

    @cached_on('_cache')
    def graded_piece_basis(self, k, fixed_only):
        return _graded_piece(self, k, fixed_only)

    @property
    def field_conductor(self):
        return lcm(self.conductor, self.theta)


class AlgElem(SparseElem):
    __slots__ = ()

    def vector(self):
        return _terms_to_dense(self.terms, self.parent.dim)

    def parity(self):
        return self.parent.parity_of_terms(self.terms)

    def degrees(self):
        return {self.parent.degrees[i] for i in self.terms}

    def psi(self, power=1):
        return self.parent.element(
            vecmat(self.vector(), self.parent.psi_matrix(power)))

    def trace(self):
        return self.parent.trace_terms(self.terms)


def _dense_to_terms(vector):
    return {i: c for i, c in enumerate(vector) if c}


def _terms_to_dense(terms, dim):
    v = [ZERO] * dim
    for i, c in terms.items():
        v[i] = c
    return v


def alg_mul(F, u, v):
    if u.parent is not F or v.parent is not F:
        raise AlgebraMismatch("elements do not belong to {}".format(F.name))
    return F.multiply(u, v)


def dual_basis(F):
    """Left dual basis: tr(dual_basis(F)[i] * b_j) = delta_ij."""
    return [F.element(row) for row in F.dual]


# construction


def _sparse_products(dim, struct_consts):
    return tuple(
        tuple({k: c for k, c in enumerate(struct_consts[i][j]) if c}
              for j in range(dim))
        for i in range(dim))


def _check_shapes(labels, degrees, parities, struct_consts, trace, unit):
    dim = len(labels)
    if dim == 0:
        raise SpecError("an algebra needs at least one basis element")
    if len(set(labels)) != dim:
        raise SpecError("basis labels must be distinct: {}".format(labels))
    for field, values in (("degrees", degrees), ("parities", parities),
                          ("trace", trace)):
        if len(values) != dim:
            raise SpecError("{} has {} entries for {} basis elements"
                            .format(field, len(values), dim))
    if unit is not None and len(unit) != dim:
        raise SpecError("unit has {} entries for {} basis elements"
                        .format(len(unit), dim))
    if len(struct_consts) != dim or any(
            len(row) != dim or any(len(v) != dim for v in row)
            for row in struct_consts):
        raise SpecError("mult must be a {0}x{0}x{0} cube".format(dim))
    if any(d < 0 for d in degrees):
        raise SpecError("degrees must be nonnegative")
    if any(p not in (0, 1) for p in parities):
        raise SpecError("parities must be 0 or 1")


def _check_grading(labels, degrees, parities, products):
    dim = len(labels)
    for i in range(dim):
        for j in range(dim):
            for k in products[i][j]:
                if (degrees[k] != degrees[i] + degrees[j]
                        or parities[k] != (parities[i] + parities[j]) % 2):
                    raise GradingViolation(
                        "{}*{} has a component on {} of the wrong degree "
                        "or parity".format(labels[i], labels[j], labels[k]))


def _mul(products, left, right):
    out = {}
    for i, a in left.items():
        for j, b in right.items():
            ab = a * b
            for k, c in products[i][j].items():
                accumulate(out, k, ab * c)
    return out


def _find_unit(dim, products):
    """Solve for u with u*b_j = b_j for every j, as a linear system."""
    m, keys = sparse_to_dense(
        [{(j, k): c for j in range(dim)
          for k, c in products[i][j].items()} for i in range(dim)],
        keys=[(j, k) for j in range(dim) for k in range(dim)])
    rhs = [ONE if j == k else ZERO for j, k in keys]
    sol = solve(m, rhs)
    if sol is None:
        raise NoUnit("no left unit exists")
    return sol


def _check_unit(labels, products, unit):
    dim = len(labels)
    u = _dense_to_terms(unit)
    for j in range(dim):
        b = {j: ONE}
        if _mul(products, u, b) != b or _mul(products, b, u) != b:
            raise NoUnit("unit fails on basis element {}".format(labels[j]))


def _check_associative(labels, products):
    dim = len(labels)
    for i in range(dim):
        for j in range(dim):
            ij = products[i][j]
            for k in range(dim):
                left = _mul(products, ij, {k: ONE})
                right = _mul(products, {i: ONE}, products[j][k])
                if left != right:
                    raise NotAssociative(
                        "({0}*{1})*{2} != {0}*({1}*{2})".format(
                            labels[i], labels[j], labels[k]))


def _check_trace(labels, degrees, parities, trace):
    delta = max(degrees)
    for i, value in enumerate(trace):
        if value and (degrees[i] != delta or parities[i]):
            raise GradingViolation(
                "trace of {} must vanish: the trace is even of degree -{}"
                .format(labels[i], delta))
    return delta


def _gram(dim, products, trace):
    g = zeros(dim, dim)
    for a in range(dim):
        for b in range(dim):
            total = ZERO
            for k, c in products[a][b].items():
                if trace[k]:
                    total = total + c * trace[k]
            g[a][b] = total
    return g


def _nakayama(dim, parities, gram, gram_inverse):
    """Rows of psi: G P[i]^T = r_i with r_i[j] = (-1)^{p_i p_j} G[i][j]."""
    rows = []
    for i in range(dim):
        r = [gram[i][j] * _sign(parities[i] * parities[j])
             for j in range(dim)]
        rows.append([sum((gram_inverse[a][j] * r[j] for j in range(dim)
                          if r[j]), ZERO) for a in range(dim)])
    return rows


def _order(matrix, bound):
    dim = len(matrix)
    one = identity(dim)
    power = matrix
    for theta in range(1, bound + 1):
        if matrices_equal(power, one):
            return theta
        power = matmul(power, matrix)
    raise NakayamaInfiniteOrder(
        "the Nakayama automorphism has no order up to {}".format(bound))


def _eigenbasis(nakayama, theta):
    """Eigenvectors of psi grouped by exponent r (eigenvalue omega^r)."""
    dim = len(nakayama)
    omega = root_of_unity(theta)
    powers = [identity(dim)]
    for _ in range(1, theta):
        powers.append(matmul(powers[-1], nakayama))
    groups = []
    found = 0
    for r in range(theta):
        proj = zeros(dim, dim)
        for k, pk in enumerate(powers):
            weight = omega ** (-r * k)
            for a in range(dim):
                for b in range(dim):
                    if pk[a][b]:
                        proj[a][b] = proj[a][b] + weight * pk[a][b]
        proj = [[x / theta for x in row] for row in proj]
        pivots = reduced_row_echelon(proj)
        vectors = tuple(tuple(proj[i]) for i in range(len(pivots)))
        eigenvalue = omega ** r
        for v in vectors:
            if vecmat(list(v), nakayama) != [eigenvalue * x for x in v]:
                raise NakayamaNotDiagonalizable(
                    "projector image is not an eigenspace")
        found += len(vectors)
        if vectors:
            groups.append((r, vectors))
    if found != dim:
        raise NakayamaNotDiagonalizable(
            "eigenspaces span {} of {} dimensions".format(found, dim))
    return tuple(groups)


def make_algebra(name, labels, degrees, parities, struct_consts, trace,
                 unit=None, conductor=1, theta_bound=None):
    """
    Validate structure data and derive duals, Nakayama data and theta.

    ``struct_consts[i][j][k]`` is the coefficient of ``b_k`` in
    ``b_i * b_j``; entries may be ints, fractions or CycScalar.
    """
    labels = tuple(labels)
    degrees = tuple(int(d) for d in degrees)
    parities = tuple(int(p) for p in parities)
    _check_shapes(labels, degrees, parities, struct_consts, trace, unit)
    dim = len(labels)
    cube = tuple(tuple(tuple(as_scalar(c, conductor) for c in vec)
                       for vec in row) for row in struct_consts)
    products = _sparse_products(dim, cube)
    trace = tuple(as_scalar(c, conductor) for c in trace)

    _check_grading(labels, degrees, parities, products)
    if unit is None:
        unit = _find_unit(dim, products)
    unit = tuple(as_scalar(c, conductor) for c in unit)
    _check_unit(labels, products, unit)
    _check_associative(labels, products)
    delta = _check_trace(labels, degrees, parities, trace)

    gram = _gram(dim, products, trace)
    try:
        gram_inverse = inverse(gram)
    except SingularMatrix:
        raise DegenerateTrace("the trace pairing of {} is degenerate"
                              .format(name))
    # left duals: tr(b_i^vee b_j) = delta_ij means D G = 1
    dual = gram_inverse
    nakayama = _nakayama(dim, parities, gram, gram_inverse)
    bound = theta_bound or get_settings().theta_bound
    theta = _order(nakayama, bound)
    nakayama_inverse = identity(dim)
    for _ in range(theta - 1):
        nakayama_inverse = matmul(nakayama_inverse, nakayama)
    eigenbasis = _eigenbasis(nakayama, theta)
    log.debug("built %s: dim=%d theta=%d delta=%d", name, dim, theta, delta)

    return FrobAlg(
        name=name,
        conductor=lcm(conductor, theta),
        labels=labels,
        degrees=degrees,
        parities=parities,
        struct_consts=cube,
        products=products,
        unit=unit,
        trace_vec=trace,
        gram=gram,
        dual=tuple(tuple(row) for row in dual),
        nakayama=tuple(tuple(row) for row in nakayama),
        nakayama_inverse=tuple(tuple(row) for row in nakayama_inverse),
        theta=theta,
        delta=delta,
        eigenbasis=eigenbasis,
    )


def build_algebra(spec, theta_bound=None):
    """Build a FrobAlg from an AlgebraSpec model or its dict form."""
    from .functions import to_model
    from .specfile import AlgebraSpec

    spec = to_model(AlgebraSpec, spec)
    conductor = spec.conductor
    return make_algebra(
        name=spec.name or "F",
        labels=spec.basis,
        degrees=spec.degrees,
        parities=spec.parities,
        struct_consts=[[[as_scalar(c, conductor) for c in vec]
                        for vec in row] for row in spec.mult],
        trace=[as_scalar(c, conductor) for c in spec.trace],
        unit=(None if spec.unit is None
              else [as_scalar(c, conductor) for c in spec.unit]),
        conductor=conductor,
        theta_bound=theta_bound,
    )


def rebuild(F, name, struct_consts, trace, unit, labels=None):
    return make_algebra(name, labels or F.labels, F.degrees, F.parities,
                        struct_consts, trace, unit=unit,
                        conductor=F.conductor)


def opposite(F):
    """F^op: b *op c = (-1)^{|b||c|} c b, with the same trace."""
    cube = [[[c * _sign(F.parities[i] * F.parities[j])
              for c in F.struct_consts[j][i]]
             for j in range(F.dim)] for i in range(F.dim)]
    return rebuild(F, F.name + "^op", cube, F.trace_vec, F.unit)


def _homogeneous_blocks(F):
    blocks = {}
    for i in range(F.dim):
        blocks.setdefault((F.degrees[i], F.parities[i]), []).append(i)
    return blocks


def change_basis(F, matrix, labels=None):
    """
    The same algebra in the basis ``b'_i = sum_a matrix[i][a] b_a``.

    Each new basis vector must be homogeneous.
    """
    matrix = [[as_scalar(c) for c in row] for row in matrix]
    if len(matrix) != F.dim or any(len(row) != F.dim for row in matrix):
        raise DimensionMismatch("change of basis must be {0}x{0}"
                                .format(F.dim))
    degrees, parities = [], []
    for row in matrix:
        support = {(F.degrees[a], F.parities[a])
                   for a, c in enumerate(row) if c}
        if len(support) != 1:
            raise GradingViolation("new basis vectors must be homogeneous")
        degree, parity = support.pop()
        degrees.append(degree)
        parities.append(parity)
    try:
        back = inverse(matrix)
    except SingularMatrix:
        raise BadParams("change of basis matrix is singular")
    cube = []
    for i in range(F.dim):
        row = []
        for j in range(F.dim):
            prod = F.mul_vectors(matrix[i], matrix[j])
            row.append(vecmat(prod, back))
        cube.append(row)
    trace = [F.trace_terms(_dense_to_terms(v)) for v in matrix]
    unit = vecmat(list(F.unit), back)
    labels = labels or ["e{}".format(i + 1) for i in range(F.dim)]
    return make_algebra(F.name + "'", labels, degrees, parities, cube,
                        trace, unit=unit, conductor=F.conductor)


def left_multiplication(F, u):
    """Matrix of f -> u f."""
    u_terms = u.terms
    return [_terms_to_dense(F.mul_terms(u_terms, {i: ONE}), F.dim)
            for i in range(F.dim)]


def invert_element(F, u):
    """Two-sided inverse of u, or BadParams."""
    sol = solve([list(col) for col in zip(*left_multiplication(F, u))],
                list(F.unit))
    if sol is None:
        raise BadParams("{} is not invertible".format(u))
    inv = F.element(sol)
    if (inv * u) != F.one():
        raise BadParams("{} has no two-sided inverse".format(u))
    return inv


def retrace(F, u):
    """
    F with trace f -> tr(f u) for an even invertible u of degree 0.

    Its Nakayama automorphism is f -> u psi(f) u^-1.
    """
    if any(F.parities[i] for i in u.terms):
        raise BadParams("trace change element must be even")
    if any(F.degrees[i] for i in u.terms):
        raise BadParams("trace change element must have degree 0")
    invert_element(F, u)
    trace = [F.trace_terms(F.mul_terms({i: ONE}, u.terms))
             for i in range(F.dim)]
    return rebuild(F, F.name + "[u]", F.struct_consts, trace, F.unit)


# subspaces


def _twist_condition(F, index, parity, power):
    """Coordinates of g b_index - (-1)^{p |g|} b_index psi^power(g)."""
    column = {}
    for j in range(F.dim):
        left = F.mul_terms({j: ONE}, {index: ONE})
        right = F.mul_terms({index: ONE}, F.psi_terms(j, power))
        sign = _sign(parity * F.parities[j])
        for k, c in left.items():
            accumulate(column, ('twist', j, k), c)
        for k, c in right.items():
            accumulate(column, ('twist', j, k), -c * sign)
    return column


def graded_piece(F, k, fixed_only=False):
    """
    Basis of F^(k) = {f : g f = (-1)^{|f||g|} f psi^k(g)}.

    With ``fixed_only`` the basis of F^(k) intersected with the
    psi-fixed subspace.
    """
    return list(F.graded_piece_basis(k % F.theta, bool(fixed_only)))


def _graded_piece(F, k, fixed_only):
    basis = []
    for (degree, parity), indices in sorted(_homogeneous_blocks(F).items()):
        columns = []
        for a in indices:
            column = _twist_condition(F, a, parity, k)
            if fixed_only:
                for b, c in F.psi_terms(a, 1).items():
                    accumulate(column, ('psi', b), c)
                accumulate(column, ('psi', a), -ONE)
            columns.append(column)
        m, _ = sparse_to_dense(columns)
        for v in nullspace(m, n_cols=len(indices)):
            basis.append(F.element({a: c for a, c in zip(indices, v)}))
    return tuple(basis)


def in_span(F, elements, f):
    if not elements:
        return not f
    m = [list(col) for col in zip(*[e.vector() for e in elements])]
    return solve(m, f.vector()) is not None


# morphisms


@immutable
class MorphismVerdict(object):
    valid = attrib()
    unital = attrib()
    graded = attrib()
    multiplicative = attrib()
    trace_preserving = attrib()
    nakayama_compatible = attrib(default=None)
    dual_identity = attrib(default=None)
    failures = attrib(default=())


def check_frobenius_morphism(F, G, matrix, anti=False):
    """
    Check that ``matrix`` (row i = image of b_i in G) is a trace-preserving
    homomorphism, or with ``anti`` an anti-homomorphism in the super sense
    tau(ab) = (-1)^{|a||b|} tau(b) tau(a).
    """
    matrix = [[as_scalar(c) for c in row] for row in matrix]
    if len(matrix) != F.dim or any(len(row) != G.dim for row in matrix):
        raise DimensionMismatch("a map {} -> {} needs a {}x{} matrix".format(
            F.name, G.name, F.dim, G.dim))
    failures = []

    def image(terms):
        out = {}
        for i, c in terms.items():
            for k, d in enumerate(matrix[i]):
                if d:
                    accumulate(out, k, c * d)
        return out

    unital = image(_dense_to_terms(F.unit)) == _dense_to_terms(G.unit)
    if not unital:
        failures.append("unit is not preserved")

    graded = all(G.degrees[k] == F.degrees[i]
                 and G.parities[k] == F.parities[i]
                 for i, row in enumerate(matrix)
                 for k, c in enumerate(row) if c)
    if not graded:
        failures.append("degree or parity is not preserved")

    multiplicative = True
    for i in range(F.dim):
        for j in range(F.dim):
            lhs = image(F.products[i][j])
            if anti:
                rhs = G.mul_terms(image({j: ONE}), image({i: ONE}))
                sign = _sign(F.parities[i] * F.parities[j])
                rhs = {k: c * sign for k, c in rhs.items()}
            else:
                rhs = G.mul_terms(image({i: ONE}), image({j: ONE}))
            if lhs != rhs:
                multiplicative = False
                failures.append("{} fails on ({}, {})".format(
                    "anti-multiplicativity" if anti else "multiplicativity",
                    F.labels[i], F.labels[j]))
                break
        if not multiplicative:
            break

    trace_preserving = all(
        G.trace_terms(image({i: ONE})) == F.trace_vec[i]
        for i in range(F.dim))
    if not trace_preserving:
        failures.append("trace is not preserved")

    valid = unital and graded and multiplicative and trace_preserving
    nakayama_compatible = dual_identity = None
    if valid:
        target = G.nakayama_inverse if anti else G.nakayama
        nakayama_compatible = matrices_equal(
            matmul(F.nakayama, matrix), matmul(matrix, [list(r)
                                                        for r in target]))
        if not nakayama_compatible:
            failures.append("Nakayama automorphisms are not intertwined")
        if anti:
            dual_identity = True
            for b in range(F.dim):
                tau_b = image({b: ONE})
                for c in range(F.dim):
                    tau_dual = image(_dense_to_terms(F.dual[c]))
                    value = G.trace_terms(G.mul_terms(tau_b, tau_dual))
                    expected = _sign(F.parities[b]) if b == c else 0
                    if value != expected:
                        dual_identity = False
            if not dual_identity:
                failures.append("dual basis identity fails")
    return MorphismVerdict(
        valid=valid,
        unital=unital,
        graded=graded,
        multiplicative=multiplicative,
        trace_preserving=trace_preserving,
        nakayama_compatible=nakayama_compatible,
        dual_identity=dual_identity,
        failures=tuple(failures),
    )


def check_double_dual(F):
    """(b^vee)^vee = (-1)^{|b|} psi^-1(b) for every basis element."""
    # the left dual of the basis B^vee is the matrix D' with D' D^T G = 1
    dual = [list(row) for row in F.dual]
    pairing = matmul(dual, [list(col) for col in zip(*F.gram)])
    double = inverse([list(col) for col in zip(*pairing)])
    for b in range(F.dim):
        expected = [c * _sign(F.parities[b]) for c in F.nakayama_inverse[b]]
        if double[b] != expected:
            return False
    return True