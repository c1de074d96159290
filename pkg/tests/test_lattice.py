"""
Tests for lattices, sublattices and characters
"""

import pytest
from sympy import Rational

from k3lat.exceptions import K3LatPreconditionError, K3LatValidationError
from k3lat.lattice import (
    brauer_element_count,
    character_kernel,
    coordinates,
    direct_sum,
    discriminant,
    discriminant_group,
    full_embedding,
    index_from_discriminants,
    intersect,
    lattice_info,
    orthogonal_complement,
    pushforward,
    rank1,
    restrict_character,
    saturation,
    signature,
    span,
    standard,
    sublattice_index,
)
from k3lat.models.lattice import Character, Embedding, Lattice


@pytest.fixture
def u():
    return standard("U")


@pytest.fixture
def pic_beta():
    return Lattice([[2, 3], [3, 0]])


class TestStandardLattices:
    """Test named constructors"""

    def test_hyperbolic_plane(self, u):
        """Test U"""
        assert u.gram.tolist() == [[0, 1], [1, 0]]
        assert discriminant(u) == -1
        assert signature(u) == (1, 1)

    def test_e8neg(self):
        """Test the negative definite E8"""
        e8 = standard("E8neg")
        assert e8.rank == 8
        assert discriminant(e8) == 1
        assert signature(e8) == (0, 8)
        assert e8.is_even

    def test_k3_lattice(self):
        """Test the K3 lattice invariants"""
        k3 = standard("K3")
        assert k3.rank == 22
        assert discriminant(k3) == -1
        assert signature(k3) == (3, 19)
        assert k3.is_even
        assert discriminant_group(k3) == []

    def test_rank1_names(self):
        """Test both rank1 spellings"""
        assert standard("rank1:8").gram.tolist() == [[8]]
        assert standard("rank1(-72)").gram.tolist() == [[-72]]

    def test_rank1_zero(self):
        """Test <0> is rejected"""
        with pytest.raises(K3LatValidationError, match="nonzero"):
            rank1(0)

    def test_unknown_name(self):
        """Test unknown names list the accepted ones"""
        with pytest.raises(K3LatValidationError, match="Unknown lattice name") as exc:
            standard("E7")
        assert "K3" in exc.value.errors["accepted"]

    def test_non_symmetric_gram(self):
        """Test Gram matrices must be symmetric"""
        with pytest.raises(K3LatValidationError, match="symmetric"):
            Lattice([[1, 2], [3, 4]])

    def test_direct_sum(self, u):
        """Test block-diagonal Gram"""
        assert direct_sum(u, rank1(2)).gram.tolist() == [[0, 1, 0], [1, 0, 0], [0, 0, 2]]

    def test_lattice_info(self, pic_beta):
        """Test the summary used by `lattice info`"""
        info = lattice_info(pic_beta)
        assert info == {
            "rank": 2,
            "signature": [1, 1],
            "disc": -9,
            "disc_group": [9],
            "even": True,
        }


class TestDiscriminants:
    """Test discriminant groups and indices"""

    def test_m_beta_group(self, pic_beta):
        """Test Z/9"""
        assert discriminant_group(pic_beta) == [9]

    def test_m_alpha_group(self):
        """Test (Z/2)^2"""
        assert discriminant_group(Lattice([[2, 0], [0, -2]])) == [2, 2]

    def test_degenerate(self):
        """Test singular Gram matrices have no discriminant group"""
        with pytest.raises(K3LatPreconditionError, match="degenerate"):
            discriminant_group(Lattice([[0]]))

    def test_index_from_discriminants(self):
        """Test index^2 = 648 / 8"""
        assert index_from_discriminants(648, 8) == 9
        assert index_from_discriminants(-8, 2) == 2

    def test_index_not_divisible(self):
        """Test non-divisible discriminants"""
        with pytest.raises(K3LatPreconditionError, match="not divisible"):
            index_from_discriminants(8, 3)

    def test_index_not_square(self):
        """Test non-square quotients"""
        with pytest.raises(K3LatPreconditionError, match="perfect square"):
            index_from_discriminants(16, 2)


class TestSublattices:
    """Test embeddings, complements, saturation and intersections"""

    def test_complement_in_m_beta(self, pic_beta):
        """Test H-perp is spanned by 3D - 5F of norm -72"""
        r = orthogonal_complement(span(pic_beta, [[1, 1]]))
        assert r.basis.tolist() == [[3, -5]]
        assert pic_beta.norm([3, -5]) == -72

    def test_complement_of_nothing(self, u):
        """Test the complement of the zero sublattice is everything"""
        e = Embedding(u, [])
        assert orthogonal_complement(e).same_lattice(full_embedding(u))

    def test_dependent_basis(self, u):
        """Test basis rows must be independent"""
        with pytest.raises(K3LatValidationError, match="linearly independent"):
            span(u, [[1, 1], [2, 2]])

    def test_saturation(self, u):
        """Test 2Z e1 saturates to Z e1 with index 2"""
        closure, index = saturation(span(u, [[2, 0]]))
        assert closure.basis.tolist() == [[1, 0]]
        assert index == 2

    def test_saturation_of_primitive(self, pic_beta):
        """Test a primitive sublattice is its own saturation"""
        e = span(pic_beta, [[1, 1]])
        closure, index = saturation(e)
        assert index == 1
        assert closure.same_lattice(e)

    def test_sublattice_index(self, u):
        """Test |det| of a full-rank basis"""
        assert sublattice_index(span(u, [[2, 0], [0, 3]])) == 6

    def test_sublattice_index_rank_mismatch(self, u):
        """Test index needs a full-rank sublattice"""
        with pytest.raises(K3LatValidationError, match="full-rank"):
            sublattice_index(span(u, [[1, 0]]))

    def test_same_lattice(self, u):
        """Test equality through HNF"""
        assert span(u, [[1, 1], [0, 1]]).same_lattice(full_embedding(u))
        assert not span(u, [[2, 0], [0, 1]]).same_lattice(full_embedding(u))

    def test_intersect(self):
        """Test (2Z + Z) meet (Z + 2Z) = 2Z + 2Z"""
        z2 = Lattice([[1, 0], [0, 1]])
        meet = intersect(span(z2, [[2, 0], [0, 1]]), span(z2, [[1, 0], [0, 2]]))
        assert meet.basis.tolist() == [[2, 0], [0, 2]]

    def test_intersect_different_ambients(self, u):
        """Test intersections need a common ambient"""
        with pytest.raises(K3LatValidationError, match="same ambient"):
            intersect(span(u, [[1, 0]]), span(rank1(2), [[1]]))

    def test_coordinates(self, u):
        """Test rational coordinates in a sublattice basis"""
        coords = coordinates(span(u, [[2, 0]]), [[1, 0]])
        assert coords.tolist() == [[Rational(1, 2)]]

    def test_coordinates_outside_span(self, u):
        """Test vectors outside the span"""
        with pytest.raises(K3LatPreconditionError):
            coordinates(span(u, [[1, 0]]), [[0, 1]])

    def test_pushforward(self, u):
        """Test composing embeddings"""
        outer = span(u, [[2, 0], [0, 1]])
        inner = span(outer.sublattice(), [[1, 1]])
        assert pushforward(inner, outer).basis.tolist() == [[2, 1]]

    def test_pushforward_mismatch(self, u):
        """Test the inner embedding must live in the outer sublattice"""
        with pytest.raises(K3LatValidationError):
            pushforward(span(rank1(2), [[1]]), span(u, [[1, 0], [0, 1]]))


class TestCharacters:
    """Test Brauer-type characters and their kernels"""

    def test_values_reduced(self):
        """Test values are stored mod n and the order is exact"""
        c = Character(Lattice([[1, 0], [0, 1]]), 4, (2, 6))
        assert c.values == (2, 2)
        assert c.order == 2

    def test_invalid_modulus(self, u):
        """Test n >= 1"""
        with pytest.raises(K3LatValidationError, match="modulus"):
            Character(u, 0, (1, 0))

    def test_wrong_length(self, u):
        """Test one value per basis vector"""
        with pytest.raises(K3LatValidationError, match="length"):
            Character(u, 2, (1,))

    def test_kernel(self, u):
        """Test ker(x -> x1 mod 2) = 2Z + Z"""
        kernel = character_kernel(Character(u, 2, (1, 0)))
        assert kernel.basis.tolist() == [[2, 0], [0, 1]]
        assert sublattice_index(kernel) == 2

    def test_kernel_index_is_order(self, u):
        """Test the kernel index equals the exact order"""
        c = Character(u, 6, (2, 4))
        assert sublattice_index(character_kernel(c)) == c.order == 3

    def test_restrict(self, u):
        """Test restriction reduces to the exact order"""
        c = Character(u, 4, (1, 2))
        restricted = restrict_character(c, span(u, [[2, 0], [0, 1]]))
        assert restricted.modulus == 2
        assert restricted.values == (1, 1)

    def test_restrict_wrong_domain(self, u):
        """Test restriction needs a sublattice of the domain"""
        with pytest.raises(K3LatValidationError, match="domain"):
            restrict_character(Character(u, 2, (1, 0)), span(rank1(2), [[1]]))

    def test_brauer_element_count(self):
        """Test n^rank elements of order dividing n"""
        assert brauer_element_count(standard("U"), 3) == 9
        with pytest.raises(K3LatValidationError):
            brauer_element_count(standard("U"), 0)
