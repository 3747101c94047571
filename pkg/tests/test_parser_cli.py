import json
import random
from fractions import Fraction

import pytest
from conftest import random_elem
from hypothesis import given, settings
from hypothesis import strategies as st

from hwreflect.catalog import get_algebra
from hwreflect.cli import main
from hwreflect.parser import (
    Commutator,
    Evaluator,
    Gen,
    Num,
    Param,
    ParseError,
    Power,
    Product,
    Sum,
    Tensor,
    parse_expr,
    reduce_text,
    to_text,
)

RE = get_algebra("re")
UHW = get_algebra("uhw")


def parse_re(text):
    return parse_expr(text, RE.P, RE.named)


def test_commutator_node():
    assert parse_expr("[Am, Ap]", UHW.P) == Commutator(Gen("Am"), Gen("Ap"))


def test_sum_of_products():
    node = parse_re("beta*delta - delta*beta")
    assert node == Sum(((1, Product((Gen("beta"), Gen("delta")))),
                        (-1, Product((Gen("delta"), Gen("beta"))))))


def test_tensor_node():
    assert parse_re("alpha (x) gamma") == Tensor((Gen("alpha"), Gen("gamma")))


def test_tensor_binds_tighter_than_product():
    node = parse_re("2*h*alpha (x) beta^2")
    assert node == Product((Num(Fraction(2)), Param("h"),
                            Tensor((Gen("alpha"), Power(Gen("beta"), 2)))))


@pytest.mark.parametrize("text, line, col, fragment", [
    ("alpha*", 1, 7, "unexpected end of input"),
    ("foo + 1", 1, 1, "unknown generator 'foo'"),
    ("[alpha, beta", 1, 13, "expected ']'"),
    ("alpha (x) beta (x) gamma (x) delta", 1, 26, "tensor rank 4"),
    ("alpha\n  + $", 2, 5, "unexpected character"),
    ("alpha^1/2", 1, 7, "nonnegative integer"),
])
def test_parse_errors(text, line, col, fragment):
    with pytest.raises(ParseError) as info:
        parse_re(text)
    assert (info.value.line, info.value.col) == (line, col)
    assert fragment in info.value.msg


def test_generators_are_checked_per_algebra():
    with pytest.raises(ParseError):
        parse_expr("alpha", UHW.P)


@pytest.mark.parametrize("text", [
    "[Am, Ap]", "beta*delta - delta*beta", "alpha (x) gamma", "1", "-w*alpha^2",
    "(alpha + beta)^3*gamma", "1/2*w^2*alpha*beta", "(alpha*beta)*gamma",
    "-(beta*gamma) (x) (beta*gamma)", "alpha (x) beta (x) 1", "C2*[alpha, beta]",
])
def test_round_trip_examples(text):
    P = UHW.P if "A" in text else RE.P
    named = UHW.named if P is UHW.P else RE.named
    node = parse_expr(text, P, named)
    assert parse_expr(to_text(node), P, named) == node


def _nodes():
    leaf = st.one_of(
        st.fractions(min_value=0, max_value=9, max_denominator=5).map(Num),
        st.sampled_from(["h", "w"]).map(Param),
        st.sampled_from(["alpha", "beta", "gamma", "delta"]).map(Gen),
    )

    def grow(children):
        return st.one_of(
            st.lists(st.tuples(st.sampled_from([1, -1]), children), min_size=2, max_size=3)
            .map(lambda ts: Sum(tuple(ts))),
            st.lists(children, min_size=2, max_size=3).map(lambda fs: Product(tuple(fs))),
            st.tuples(children, st.integers(0, 3)).map(lambda t: Power(*t)),
            st.tuples(children, children).map(lambda t: Commutator(*t)),
        )

    return st.recursive(leaf, grow, max_leaves=8)


@settings(max_examples=200, deadline=None)
@given(_nodes())
def test_print_parse_round_trip(node):
    text = to_text(node)
    assert parse_re(text) == node


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2 ** 32), st.sampled_from(["uhw", "fun", "re", "re2", "classical"]))
def test_normal_form_text_reparses(seed, key):
    b = get_algebra(key)
    x = b.P.normal_form(random_elem(b.P, random.Random(seed)))
    text = b.P.format(x)
    assert reduce_text(text, b.P) == text
    assert Evaluator(b.P)(parse_expr(text, b.P)) == x


def test_tensor_output_reparses():
    out = reduce_text("(alpha (x) beta)*(beta (x) alpha)", RE.P, RE.named, RE.braid)
    assert reduce_text(out, RE.P, RE.named, RE.braid) == out


def test_scalar_times_tensor_only():
    with pytest.raises(ValueError):
        reduce_text("alpha*(beta (x) gamma)", RE.P, RE.named, RE.braid)
    assert reduce_text("2*h*(beta (x) gamma)", RE.P) == "(2*h)*beta (x) gamma"


def test_named_elements():
    assert reduce_text("[C2, beta]", RE.P, RE.named) == "0"
    assert reduce_text("C1", RE.P, RE.named) == "gamma"


# -- command line ------------------------------------------------------------------

def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_reduce_examples(capsys):
    assert run(capsys, "reduce", "beta*alpha") == (
        0, "alpha*beta - 2*h*alpha*gamma + w*alpha^2\n", "")
    code, out, _ = run(capsys, "reduce", "--algebra", "uhw", "--trunc", "2", "Am*Ap")
    assert (code, out) == (0, "Ap*Am + E + w*E*Ap + 1/2*w^2*E*Ap^2 + 1/6*h^2*E^3\n")
    assert run(capsys, "reduce", "1")[:2] == (0, "1\n")


def test_cli_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "reduce", "beta*")
    assert code == 2 and out == ""
    assert "line 1, column 6" in err


def test_cli_unknown_suite(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "--suite", "nope"])
    assert info.value.code == 2


def test_cli_bad_trunc(capsys):
    with pytest.raises(SystemExit) as info:
        main(["reduce", "--trunc", "-1", "1"])
    assert info.value.code == 2


def test_cli_verify_ybe(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ybe")
    assert code == 0
    assert out.splitlines()[0].startswith("ybe: PASS")
    assert "ybe[control]: FAIL" in out


def test_cli_verify_braided_prints_worked_example(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "braided")
    assert code == 0
    target = "-w*alpha*gammainv^2*delta - 2*h*gammainv^2*delta - 2*h*w*gammainv + 2*h*w"
    assert f"S~([beta,delta]) = {target}" in out
    assert f"S~(2h gamma delta - w alpha delta) = {target}" in out


def test_cli_json_is_deterministic(capsys, tmp_path):
    args = ["verify", "--suite", "limits", "--json", "--no-timing", "--seed", "5"]
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    docs = [json.loads(line) for line in first.splitlines()]
    assert [d["check"] for d in docs] == ["limits", "limits[control]"]
    assert {"check", "status", "residuals", "params", "elapsed_ms"} <= set(docs[0])
    out = tmp_path / "r.json"
    assert main(args + ["--out", str(out)]) == 0
    assert out.read_text() == first


def test_cli_seeded_fock(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "fock", "--seed", "11", "--fock-dim", "5")
    assert code == 0
    assert "fock[seeded]: PASS" in out
