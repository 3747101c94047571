import pytest

from hwreflect.ncalg import NCElem
from hwreflect.tensorspace import (
    BRAIDED,
    TensorAlgebra,
    TensorElem,
    TensorError,
    antipode_apply,
    braid_psi,
    braided_antipode,
    contract,
    coproduct_apply,
    counit_apply,
    format_tensor,
    split_leg,
)


def test_psi_table_entry(re_alg):
    P, _, bt, _ = re_alg
    de, be = P.gens("delta", "beta")
    out = format_tensor(braid_psi(TensorElem.pure(de, be), bt), P.order)
    assert out == "(-2*h)*delta (x) gamma + (2*h)*delta (x) 1 + beta (x) delta + (w)*alpha (x) delta"


def test_gamma_is_transparent(re_alg):
    P, _, bt, _ = re_alg
    for g in ("alpha", "beta", "delta", "gammainv"):
        x = P.gen(g)
        ga = P.gen("gamma")
        assert braid_psi(TensorElem.pure(ga, x), bt) == TensorElem.pure(x, ga)


def test_matrix_coproduct_of_beta(re_alg):
    P, hd, bt, _ = re_alg
    T = TensorAlgebra(P, mode=BRAIDED, braid=bt)
    assert T.format(coproduct_apply(P.gen("beta"), hd, T)) == (
        "beta (x) 1 + alpha (x) delta + 1 (x) beta")


def test_antipode_on_generator(re_alg):
    P, hd, bt, _ = re_alg
    al = P.gen("alpha")
    assert P.format(braided_antipode(al, hd, bt)) == "-alpha*gammainv"
    assert P.format(antipode_apply(al, hd, P)) == "-alpha*gammainv"


def test_braided_antipode_differs_from_plain_on_products(re_alg):
    P, hd, bt, _ = re_alg
    x = P.gen("delta") * P.gen("alpha")
    assert P.normal_form(braided_antipode(x, hd, bt) - antipode_apply(x, hd, P))


def test_rank_errors(re_alg):
    P, _, bt, _ = re_alg
    with pytest.raises(TensorError):
        TensorAlgebra(P, rank=3, mode=BRAIDED, braid=bt)
    with pytest.raises(TensorError):
        TensorElem(4)
    with pytest.raises(TensorError):
        TensorElem.pure(P.gen("alpha")) + TensorElem.pure(P.gen("alpha"), P.one())


def test_contract_and_split(uhw2):
    P, hd, _ = uhw2
    Ap, N = P.gens("Ap", "N")
    assert contract(TensorElem.pure(Ap, N), P) == P.normal_form(Ap * N)
    T2 = TensorAlgebra(P)
    T3 = TensorAlgebra(P, rank=3)
    t3 = split_leg(hd.coproduct["Ap"], 0, lambda wd: coproduct_apply(NCElem({wd: 1}), hd, T2))
    assert T3.normalize(t3) == T3.pure(Ap, P.one(), P.one()) + T3.pure(P.one(), Ap, P.one()) \
        + T3.pure(P.one(), P.one(), Ap)


def test_uhw_counit(uhw):
    P, hd, _ = uhw
    assert counit_apply(P.normal_form(P.gen("Am") * P.gen("Ap")), hd, P) == 0
    assert counit_apply(P.one() * 3, hd, P) == 3


def test_braided_product_is_associative(re_alg):
    P, _, bt, _ = re_alg
    T = TensorAlgebra(P, mode=BRAIDED, braid=bt)
    al, be, de = P.gens("alpha", "beta", "delta")
    x, y, z = T.pure(de, al), T.pure(be, de), T.pure(al, be)
    assert T.mul(T.mul(x, y), z) == T.mul(x, T.mul(y, z))
