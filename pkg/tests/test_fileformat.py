import random

import pytest

from admpoisson.scalars import Scalar, of, one, zero
from admpoisson.tensors import MulTensor, mat_identity
from admpoisson.yangbaxter import RTensor
from admpoisson.bialgebras import Comultiplication
from admpoisson.fileformat import (AlgebraFile, FormatError, parse_file,
                                   print_file, read_file, write_file)

from oracles import rand_mul, rand_mat


SAMPLE = """\
# a commented example
format 1
field rational
dim 2
vdim 1

op star
star: e1 e1 = 1 e1          # products not listed are zero
star: e1 e2 = 1 e2 + -1/2 e1

tensor r: e1 e2 = 3/4
rep l e1 = [2]
rep l e2 = [0]
map theta = [1 ; 0]
comul alpha
alpha: e1 = 1 e1 e2 + -1 e2 e1
"""


def test_parse_sample():
    af = parse_file(SAMPLE)
    assert af.p == 0 and af.dim == 2 and af.vdim == 1
    star = af.ops["star"]
    assert star.prod(0, 1) == [of(-1, 2), one()]
    assert star.prod(1, 1) == [zero(), zero()]
    assert af.tensors["r"].coeff[0][1] == of(3, 4)
    assert af.reps["l"][0] == [[of(2)]]
    assert af.maps["theta"] == [[one()], [zero()]]
    assert af.comuls["alpha"].a[0][0][1] == one()
    assert af.comuls["alpha"].a[0][1][0] == of(-1)


def test_print_parse_identity():
    af = parse_file(SAMPLE)
    assert parse_file(print_file(af)) == af


def test_print_is_fixed_point():
    text = print_file(parse_file(SAMPLE))
    assert print_file(parse_file(text)) == text


def test_roundtrip_random_files():
    rng = random.Random(70)
    for p in (0, 5):
        af = AlgebraFile(p=p, dim=2, vdim=2)
        af.ops["star"] = rand_mul(rng, 2, p)
        af.ops["succ"] = rand_mul(rng, 2, p)
        af.tensors["r"] = RTensor(rand_mat(rng, 2, 2, p), p)
        af.reps["l"] = [rand_mat(rng, 2, 2, p) for _ in range(2)]
        af.reps["r"] = [rand_mat(rng, 2, 2, p) for _ in range(2)]
        af.maps["theta"] = rand_mat(rng, 2, 2, p)
        from oracles import rand_vec
        af.comuls["alpha"] = Comultiplication(
            2, p, [[rand_vec(rng, 2, p) for _ in range(2)] for _ in range(2)])
        assert parse_file(print_file(af)) == af


def test_zero_tensor_survives_roundtrip():
    af = AlgebraFile(p=5, dim=2)
    af.ops["star"] = MulTensor(2, 5)
    af.tensors["r"] = RTensor.from_entries(2, {}, 5)
    text = print_file(af)
    assert "tensor r: e1 e1 = 0" in text
    back = parse_file(text)
    assert "r" in back.tensors and back.tensors["r"].is_zero()
    assert back == af


def test_rep_vdim_tag_roundtrip():
    af = AlgebraFile(p=5, dim=2, vdim=1)
    af.ops["star"] = MulTensor(2, 5)
    af.reps["l2"] = [[[one(5), zero(5)], [zero(5), one(5)]]]
    af.rep_spaces["l2"] = "vdim"
    text = print_file(af)
    assert "rep l2 vdim e1 =" in text
    back = parse_file(text)
    assert back == af
    assert back.rep_spaces["l2"] == "vdim"


def test_gf_field_header():
    af = parse_file("format 1\nfield gf 5\ndim 1\nop star\n"
                    "star: e1 e1 = 3 e1\n")
    assert af.p == 5
    assert af.ops["star"].prod(0, 0) == [Scalar(3, 1, 5)]
    assert "field gf 5" in print_file(af)


def test_repeated_terms_accumulate():
    af = parse_file("field rational\ndim 1\nop star\n"
                    "star: e1 e1 = 1 e1 + 1 e1\n")
    assert af.ops["star"].prod(0, 0) == [of(2)]


@pytest.mark.parametrize("text,line", [
    ("format 2\nfield rational\ndim 1\n", 1),
    ("dim 1\nop star\n", 2),                      # field must come first
    ("field rational\nop star\n", 2),             # dim before data
    ("field rational\nfield gf 5\ndim 1\n", 2),   # duplicate field
    ("field gf 4\ndim 1\n", 1),                   # bad characteristic
    ("field gf 3\ndim 1\n", 1),                   # unsupported characteristic
    ("field rational\ndim 1\nstar: e1 e1 = 1 e1\n", 3),  # undeclared name
    ("field rational\ndim 1\nop star\nstar: e1 e9 = 1 e1\n", 4),  # bad index
    ("field rational\ndim 1\nop star\nstar: e1 e1 = 1 e1\n"
     "star: e1 e1 = 2 e1\n", 5),                  # duplicate product
    ("field rational\ndim 1\nop star\nop star\n", 4),  # duplicate op
    ("field rational\ndim 1\nrep l e1 = [1,2 ; 3]\n", 3),  # ragged matrix
    ("field rational\ndim 1\nwibble\n", 3),       # unknown statement
    ("field rational\ndim 1\nop x vdim\n", 3),    # vdim op without vdim
])
def test_errors_carry_line_numbers(text, line):
    with pytest.raises(FormatError) as exc:
        parse_file(text)
    assert exc.value.lineno == line


def test_missing_headers():
    with pytest.raises(FormatError):
        parse_file("")
    with pytest.raises(FormatError):
        parse_file("field rational\n")


def test_read_write_files(tmp_path):
    af = parse_file(SAMPLE)
    path = tmp_path / "x.alg"
    write_file(path, af)
    assert read_file(path) == af
