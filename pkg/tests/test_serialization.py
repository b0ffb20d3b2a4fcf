import pytest

from pointedcat import (
    Document,
    ModularData,
    ParseError,
    ValidationError,
    check_gram,
    framed_link,
    parse,
    root_of_unity,
    serialize,
    sniff_document,
)
from pointedcat.cli import verify_all

SEMION_DOC = """kind: modular_data
rank: 2
s_tilde: 1, 1; 1, -1
twists: e(0/1), e(1/4)
provenance: 2
"""


class TestGramDocuments:
    def test_round_trip(self):
        gram = check_gram([[0, 2], [2, 0]])
        doc = serialize(gram)
        assert doc.kind == "gram_matrix"
        assert doc.body == "0 2\n2 0\n"
        assert parse(doc) == gram

    def test_comments_and_blanks_ignored(self):
        text = "# the semion input\n\n2\n"
        assert parse(Document("gram_matrix", text)) == check_gram([[2]])

    def test_bad_token(self):
        with pytest.raises(ParseError) as info:
            parse(Document("gram_matrix", "2 x\nx 2\n"))
        assert info.value.line == 1

    def test_sniff_defaults_to_matrix(self):
        doc = sniff_document("0 1\n1 0\n")
        assert doc.kind == "gram_matrix"
        doc = sniff_document(SEMION_DOC)
        assert doc.kind == "modular_data"


class TestModularDataDocuments:
    def test_semion_golden_document(self, semion):
        assert serialize(semion).body == SEMION_DOC

    def test_hand_written_semion_parses_to_construction(self, semion):
        assert parse(Document("modular_data", SEMION_DOC)) == semion

    def test_round_trip_fixtures(self, semion, toric, z3, ising):
        for md in (semion, toric, z3, ising):
            doc = serialize(md)
            assert parse(doc) == md
            assert serialize(parse(doc)).body == doc.body

    def test_round_trip_corpus_sample(self, corpus3_data):
        for _, md in corpus3_data[::7]:
            doc = serialize(md)
            assert parse(doc) == md

    def test_label_names_preserved(self, semion):
        named = ModularData(rank=2, s_tilde=semion.s_tilde, twists=semion.twists,
                            label_names=("unit", "s"))
        doc = serialize(named)
        assert "labels: unit, s" in doc.body
        assert parse(doc) == named

    def test_unknown_key_rejected(self):
        bad = SEMION_DOC + "color: blue\n"
        with pytest.raises(ParseError):
            parse(Document("modular_data", bad))

    def test_unbalanced_root_position(self):
        bad = SEMION_DOC.replace("e(1/4)", "e(1/4")
        with pytest.raises(ParseError) as info:
            parse(Document("modular_data", bad))
        assert info.value.line == 4
        assert info.value.column > 0

    def test_asymmetric_matrix_rejected(self):
        bad = SEMION_DOC.replace("1, 1; 1, -1", "1, 1; -1, -1")
        with pytest.raises(ValidationError):
            parse(Document("modular_data", bad))

    def test_nonroot_twist_rejected(self):
        bad = SEMION_DOC.replace("e(1/4)", "2")
        with pytest.raises(ValidationError):
            parse(Document("modular_data", bad))

    def test_missing_key(self):
        bad = "kind: modular_data\nrank: 1\ns_tilde: 1\n"
        with pytest.raises(ParseError):
            parse(Document("modular_data", bad))

    def test_bad_provenance(self):
        bad = SEMION_DOC.replace("provenance: 2", "provenance: 1")
        with pytest.raises(ValidationError):
            parse(Document("modular_data", bad))

    def test_rank_mismatch(self):
        bad = SEMION_DOC.replace("rank: 2", "rank: 3")
        with pytest.raises(ValidationError):
            parse(Document("modular_data", bad))


class TestLinkDocuments:
    def test_round_trip(self):
        link = framed_link([[1, 2], [2, -1]], [0, 3])
        doc = serialize(link)
        assert doc.kind == "link"
        assert parse(doc) == link

    def test_golden(self):
        link = framed_link([[0, 1], [1, 0]], [1, 1])
        assert serialize(link).body == (
            "kind: link\nlinking: 0 1; 1 0\ncolors: 1, 1\n")


class TestReportDocuments:
    def test_round_trip(self, semion):
        report = verify_all(semion)
        doc = serialize(report)
        assert doc.kind == "report"
        assert parse(doc) == report

    def test_result_line_consistency_checked(self):
        bad = "kind: report\ncheck: gauss_identity pass\nresult: fail\n"
        with pytest.raises(ValidationError):
            parse(Document("report", bad))

    def test_failing_report_round_trip(self, semion):
        corrupted = ModularData(rank=2, s_tilde=semion.s_tilde,
                                twists=(root_of_unity(0), root_of_unity(0)))
        report = verify_all(corrupted)
        assert not report.passed
        doc = serialize(report)
        assert "result: fail" in doc.body
        assert parse(doc) == report


class TestDeterminism:
    def test_serialize_twice_identical(self, corpus3_data):
        for _, md in corpus3_data[::11]:
            assert serialize(md).body == serialize(md).body

    def test_serialize_parse_serialize_fixed_point(self, toric):
        doc = serialize(toric)
        again = serialize(parse(doc))
        assert again.body == doc.body
