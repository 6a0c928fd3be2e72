"""
Tests for character tables: Dixon's method, the verification gate,
class function algebra, ctab files and the table cache.
"""

import pytest
import sys
import os
import logging
from pathlib import Path
from collections import Counter
from dataclasses import replace

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from characters import (
    TableCache,
    char_field_rational_dim,
    character_table,
    decompose,
    degree_split,
    dixon_prime,
    dixon_table,
    dump_table,
    fs_indicator,
    load_table,
    min_faithful_dim,
    min_nontrivial_rational_dim,
    molien_series,
    parse_table,
    realdim,
    render_table,
    restrict,
    sym_power_char,
)
from characters import table as table_module
from config import TABLE_DATA_DIR
from errors import CapExceeded, NotACharacterError, ParseError, TableError
from groups import class_fusion, conjugacy_data, generate_group
from groups.elements import PermOps

L2_7 = TABLE_DATA_DIR / "L2_7.ctab"


class TestDixon:
    """Tests for tables computed from the group."""

    def test_klein_degrees(self, klein_table):
        """PSL(2,7): degrees 1, 3, 3, 6, 7, 8 and a verified table."""
        assert klein_table.degrees == [1, 3, 3, 6, 7, 8]
        assert klein_table.verified
        assert klein_table.provenance == "dixon"

    def test_small_tables(self, gamma_table, sl27_table):
        assert sorted(gamma_table.degrees) == [1, 1, 1, 3, 3]
        assert sorted(sl27_table.degrees) == [1, 3, 3, 4, 4, 6, 6, 6, 7, 8, 8]

    def test_matches_bundled_table(self, klein_table):
        """The computed table equals the bundled one up to the order of the 7-classes."""
        bundled = load_table(L2_7)
        assert bundled.sizes == klein_table.sizes
        computed = [Counter(row) for row in klein_table.irreducibles]
        for row in bundled.irreducibles:
            assert Counter(row) in computed

    def test_prime(self):
        """The modulus is 1 mod the exponent."""
        p = dixon_prime(168, 84)
        assert (p - 1) % 84 == 0

    def test_bad_prime_override(self, klein_group, klein_classes):
        with pytest.raises(TableError):
            dixon_table(klein_group, klein_classes, prime=101)

    def test_table_cap(self):
        """max_order applies to tables as it does to groups."""
        with pytest.raises(CapExceeded):
            character_table("A7", max_order=500)


class TestClassFunctions:
    """Tests for indicators, decompositions and symmetric powers."""

    def test_frobenius_schur(self, klein_table):
        """The two 3-dimensional characters are not real; the rest are real."""
        assert [fs_indicator(klein_table, i) for i in range(6)] == [1, 0, 0, 1, 1, 1]
        assert realdim(klein_table, 1) == 6

    @pytest.mark.parametrize("k", [3, 5])
    def test_indicators_galois_invariant(self, klein_table, sl27_table, k):
        """Conjugating every value by zeta -> zeta^k permutes the rows and keeps each indicator."""
        for T in (klein_table, sl27_table):
            conjugated = replace(T, irreducibles=[[v.galois(k) for v in row] for row in T.irreducibles]).verify()
            assert all(row in T.irreducibles for row in conjugated.irreducibles)
            assert [fs_indicator(conjugated, i) for i in range(T.class_count)] == [
                fs_indicator(T, i) for i in range(T.class_count)
            ]

    def test_tensor_decomposition(self, klein_table):
        """3 x conj(3) = 1 + 8."""
        chi = klein_table.character(1)
        assert degree_split(chi * chi.conjugate()) == [1, 8]
        assert decompose(chi * chi.conjugate())[0] == (0, 1)

    def test_sym_and_wedge(self, klein_table):
        """Sym^2 of the 3 is the 6; the wedge square is the other 3."""
        chi = klein_table.character(1)
        assert degree_split(chi.sym2()) == [6]
        assert chi.lambda2() == chi.conjugate()
        assert sym_power_char(chi, 2) == chi.sym2()

    def test_not_a_character(self, klein_table):
        """A virtual character with a negative multiplicity is rejected."""
        with pytest.raises(NotACharacterError):
            decompose(klein_table.character(1) - klein_table.character(4))

    def test_min_faithful(self, klein_table, gamma_table):
        assert min_faithful_dim(klein_table) == 3
        assert min_faithful_dim(klein_table, field="real") == 6
        assert min_faithful_dim(gamma_table) == 3

    def test_rational_dims(self, klein_table):
        """The 3 needs Q(sqrt(-7)), so its rational dimension is 6, like the 6 itself."""
        assert char_field_rational_dim(klein_table, 1) == 6
        assert char_field_rational_dim(klein_table, 3) == 6
        assert min_nontrivial_rational_dim(klein_table) == 6

    def test_molien(self, klein_table):
        """Invariants of the 3 in degrees 0..12: 1, then degrees 4, 6, 8, 10 and two in 12."""
        assert molien_series(klein_table.character(1), 12) == [1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2]

    def test_restriction_to_borel(self, klein_group, klein_classes, klein_table):
        """The 3 stays irreducible on C7:C3."""
        H = generate_group(
            [[1, 2, 3, 4, 5, 6, 0, 7], [0, 2, 4, 6, 1, 3, 5, 7]], PermOps(8), expected_order=21, name="C7:C3"
        )
        H_classes = conjugacy_data(H)
        H_table = dixon_table(H, H_classes)
        fusion = class_fusion(H, H_classes, klein_group, klein_classes)
        assert degree_split(restrict(klein_table.character(1), H_table, fusion)) == [3]
        assert degree_split(restrict(klein_table.character(3), H_table, fusion)) == [3, 3]


class TestCtab:
    """Tests for the ctab text format."""

    def test_load_bundled(self):
        T = load_table(L2_7)
        assert T.name == "PSL(2,7)"
        assert T.degrees == [1, 3, 3, 6, 7, 8]
        assert T.provenance == "file"

    def test_dump_parse(self, gamma_table):
        """dump_table output parses back to the same values."""
        T = parse_table(dump_table(gamma_table)).verify()
        assert T.irreducibles == gamma_table.irreducibles
        assert T.power_maps == gamma_table.power_maps

    def test_corrupt_value(self):
        """A changed value breaks orthogonality."""
        text = L2_7.read_text().replace("chi: 8 | 0 | -1 | 0 | 1 | 1", "chi: 8 | 0 | -1 | 0 | 1 | 0")
        with pytest.raises(TableError) as exc:
            parse_table(text).verify()
        assert "orthogonality" in exc.value.relation

    def test_corrupt_power_map(self):
        """A power map that changes element orders is rejected."""
        text = L2_7.read_text().replace("pow 2: 0 0 2 1 4 5", "pow 2: 0 0 2 2 4 5")
        with pytest.raises(TableError) as exc:
            parse_table(text).verify()
        assert exc.value.relation == "power-map"

    @pytest.mark.parametrize("text", [
        "group X order 2\nsizes: 1 1\n",
        "group X order 2 classes 2\nsizes: 1 one\n",
        "group X order 3 classes 2\nsizes: 1 1\norders: 1 2\n",
        "group X order 2 classes 2\nsizes: 1 1\norders: 1 2\nchi: 1 | E(0)\n",
        "order 2\n",
    ])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_table(text)

    def test_column_check_skip_is_logged(self, gamma_table, monkeypatch, caplog):
        """Tables above the column-check limit are verified on rows only, and the log says so."""
        monkeypatch.setattr(table_module, "COLUMN_CHECK_MAX_CLASSES", 3)
        with caplog.at_level(logging.DEBUG, logger="characters.table"):
            assert replace(gamma_table).verify().verified
        assert "column orthogonality skipped" in caplog.text

    def test_render(self, klein_table):
        out = render_table(klein_table)
        assert out.splitlines()[0].startswith("PSL(2,7)  (order 168, 6 classes")
        assert "X.6" in out


class TestTableCache:
    """Tests for the on-disk table cache."""

    def test_put_get(self, tmp_path, gamma_table):
        cache = TableCache(tmp_path)
        cache.put(gamma_table, "ab" * 32)
        T = cache.get("C7:C3", "ab" * 32)
        assert T is not None
        assert T.irreducibles == gamma_table.irreducibles
        assert cache.hits == 1

    def test_tampered_entry_discarded(self, tmp_path, gamma_table):
        """An entry that fails verification is deleted and reported as a miss."""
        cache = TableCache(tmp_path)
        cache.put(gamma_table, "cd" * 32)
        path = cache.path_for("C7:C3", "cd" * 32)
        lines = path.read_text().splitlines()
        lines[-1] = lines[-1].replace("3", "4", 1)
        path.write_text("\n".join(lines) + "\n")
        assert cache.get("C7:C3", "cd" * 32) is None
        assert cache.discarded == 1
        assert not path.exists()

    def test_undeletable_entry_is_logged(self, tmp_path, gamma_table, monkeypatch, caplog):
        cache = TableCache(tmp_path)
        cache.put(gamma_table, "cd" * 32)
        path = cache.path_for("C7:C3", "cd" * 32)
        path.write_text("group C7:C3 order 21\n")

        def refuse(self, *args, **kwargs):
            raise PermissionError("read-only cache")

        monkeypatch.setattr(Path, "unlink", refuse)
        with caplog.at_level(logging.WARNING, logger="characters.cache"):
            assert cache.get("C7:C3", "cd" * 32) is None
        assert cache.discarded == 1
        assert "cannot delete cached table" in caplog.text

    def test_disabled(self, gamma_table):
        cache = TableCache(None)
        cache.put(gamma_table, "ef" * 32)
        assert cache.get("C7:C3", "ef" * 32) is None
