from hypothesis import strategies as st

from dedekind import FieldSpec, Matrix

GF2, GF3, GF5, GF7, GF97 = (FieldSpec.gf(p) for p in (2, 3, 5, 7, 97))
Q = FieldSpec.rational()

ALL_FIELDS = [GF2, GF3, GF5, GF7, GF97, Q]

fields = st.sampled_from(ALL_FIELDS)


def elements(spec):
    if spec.is_prime_field:
        return st.integers(0, spec.modulus - 1)
    return st.fractions(min_value=-20, max_value=20, max_denominator=12)


def nonzero_elements(spec):
    return elements(spec).filter(lambda x: x != 0)


@st.composite
def matrices(draw, spec, rows, cols):
    vals = draw(st.lists(st.lists(elements(spec), min_size=cols, max_size=cols),
                         min_size=rows, max_size=rows))
    return Matrix(spec, vals, cols)


@st.composite
def square_pairs(draw, max_n=5):
    """(A, B) square of the same size and field."""
    spec = draw(fields)
    n = draw(st.integers(1, max_n))
    return draw(matrices(spec, n, n)), draw(matrices(spec, n, n))


def mat(spec, rows):
    return Matrix(spec, rows, len(rows[0]) if rows else 0)


# --- acceptance summary ---------------------------------------------------------

ACCEPTANCE_RESULTS: dict[int, tuple[str, bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        name, ok, detail = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {k:2d}. {name}: {detail}")
