"""Round-trip and rejection tests for the JSON document formats."""

import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from recamp import (
    ApprovalVote,
    Assignment,
    AtMost,
    Borda,
    Condorcet,
    District,
    E1,
    E2,
    Election,
    ExplicitScoringFamily,
    LinearVote,
    OneInThreeSatInstance,
    Pricing,
    R3DMInstance,
    RandomInstanceParams,
    RecampaignInstance,
    ShapeError,
    TApproval,
    TrivialScoring,
    TVeto,
    UNBOUNDED,
    X3CInstance,
    random_instance,
)
from recamp.formats import (
    FORMAT_TAG,
    parse_3dm,
    parse_assignment,
    parse_election,
    parse_instance,
    parse_rule,
    parse_rule_name,
    parse_sat,
    parse_x3c,
    render_3dm,
    render_assignment,
    render_election,
    render_instance,
    render_rule,
    render_sat,
    render_x3c,
    rule_name,
)

ALL_RULES = [
    TApproval(1),
    TApproval(3),
    TVeto(2),
    Borda(),
    TrivialScoring(),
    ExplicitScoringFamily([(1,), (1, 0), (2, 1, 0)]),
    Condorcet(),
    E1(),
    E2(),
]


class TestRuleDocuments:
    @pytest.mark.parametrize("rule", ALL_RULES, ids=lambda r: type(r).__name__)
    def test_round_trip(self, rule):
        assert parse_rule(render_rule(rule)) == rule

    def test_command_line_spellings(self):
        assert parse_rule_name("approval:2") == TApproval(2)
        assert parse_rule_name("veto:1") == TVeto(1)
        assert parse_rule_name("borda") == Borda()
        assert parse_rule_name("trivial") == TrivialScoring()
        assert parse_rule_name("condorcet") == Condorcet()
        assert parse_rule_name("e1") == E1()
        assert parse_rule_name("e2") == E2()

    def test_spelling_round_trip(self):
        for rule in ALL_RULES:
            if isinstance(rule, ExplicitScoringFamily):
                continue
            assert parse_rule_name(rule_name(rule)) == rule

    def test_explicit_family_has_no_spelling(self):
        with pytest.raises(ShapeError):
            rule_name(ExplicitScoringFamily([(1,)]))

    def test_bad_spellings(self):
        for bad in ("approval", "approval:", "approval:x", "borda:3", "plurality"):
            with pytest.raises(ShapeError):
                parse_rule_name(bad)

    def test_bad_rule_documents(self):
        with pytest.raises(ShapeError):
            parse_rule({"family": "unknown"})
        with pytest.raises(ShapeError):
            parse_rule({"t": 1})
        with pytest.raises(ShapeError):
            parse_rule({"family": "approval"})
        with pytest.raises(ShapeError):
            parse_rule({"family": "approval", "t": True})
        with pytest.raises(ShapeError):
            parse_rule({"family": "explicit", "vectors": "nope"})


class TestElectionDocuments:
    def test_round_trip_linear(self):
        e = Election(
            ["a", "b", "c"],
            [LinearVote(["b", "a", "c"]), LinearVote(["c", "b", "a"])],
        )
        assert parse_election(render_election(e)) == e

    def test_round_trip_approval(self):
        e = Election(["a", "b"], [ApprovalVote(["b"]), ApprovalVote([])])
        assert parse_election(render_election(e)) == e

    def test_votes_key_optional(self):
        e = parse_election('{"candidates": ["a"]}')
        assert e == Election(["a"])

    def test_rejections(self):
        with pytest.raises(ShapeError):
            parse_election("not json")
        with pytest.raises(ShapeError):
            parse_election('["a"]')
        with pytest.raises(ShapeError):
            parse_election('{"format": "recamp/99", "candidates": []}')
        with pytest.raises(ShapeError):
            parse_election('{"candidates": [1]}')
        with pytest.raises(ShapeError):
            parse_election('{"candidates": ["a"], "votes": [{"approve": "a"}]}')
        with pytest.raises(ShapeError):
            parse_election('{"candidates": ["a"], "votes": [{"approves": ["a"]}]}')


def sample_instance():
    districts = (
        District(["c1"], [LinearVote(["x", "c1", "y"])]),
        District([], []),
    )
    return RecampaignInstance(
        rule=TApproval(2),
        districts=districts,
        additional=frozenset({"x", "y"}),
        bound=AtMost(2),
        pricing=Pricing(
            {(1, "x"): 3, (1, "y"): 0, (2, "x"): 1, (2, "y"): 7}, budget=8
        ),
    )


class TestInstanceDocuments:
    def test_round_trip_priced(self):
        inst = sample_instance()
        assert parse_instance(render_instance(inst)) == inst

    def test_round_trip_unbounded_unpriced(self):
        inst = RecampaignInstance(
            Condorcet(),
            (District(["b", "c"], [LinearVote(["a", "b", "c"])]),),
            frozenset({"a"}),
            UNBOUNDED,
        )
        assert parse_instance(render_instance(inst)) == inst

    def test_rendered_shape(self):
        doc = json.loads(render_instance(sample_instance()))
        assert doc["format"] == FORMAT_TAG
        assert doc["bound"] == {"atMost": 2}
        assert doc["additional"] == ["x", "y"]
        assert doc["pricing"]["budget"] == 8
        assert [1, "x", 3] in doc["pricing"]["prices"]

    def test_render_is_canonical(self):
        text = render_instance(sample_instance())
        assert text.endswith("\n") and not text.endswith("\n\n")
        assert render_instance(parse_instance(text)) == text

    def test_format_tag_optional_on_parse(self):
        doc = json.loads(render_instance(sample_instance()))
        del doc["format"]
        assert parse_instance(json.dumps(doc)) == sample_instance()

    def test_rejections(self):
        good = json.loads(render_instance(sample_instance()))

        def broken(**changes):
            doc = dict(good, **changes)
            for key, val in changes.items():
                if val is None:
                    del doc[key]
            return json.dumps(doc)

        with pytest.raises(ShapeError):
            parse_instance(broken(rule=None))
        with pytest.raises(ShapeError):
            parse_instance(broken(bound={"atMost": 0}))
        with pytest.raises(ShapeError):
            parse_instance(broken(bound="sometimes"))
        with pytest.raises(ShapeError):
            parse_instance(broken(districts={}))
        with pytest.raises(ShapeError):
            parse_instance(broken(pricing={"prices": []}))
        with pytest.raises(ShapeError):
            parse_instance(broken(pricing={"prices": [[1, "x", 1, 9]], "budget": 1}))
        dup = dict(good)
        dup["pricing"] = {
            "prices": [[1, "x", 1], [1, "x", 2]] + good["pricing"]["prices"][2:],
            "budget": 8,
        }
        with pytest.raises(ShapeError):
            parse_instance(json.dumps(dup))

    def test_assignment_round_trip(self):
        asg = Assignment({"x": 2, "y": 1})
        assert parse_assignment(render_assignment(asg)) == asg

    def test_assignment_rejections(self):
        with pytest.raises(ShapeError):
            parse_assignment('{"placement": [1]}')
        with pytest.raises(ShapeError):
            parse_assignment('{"placement": {"a": "one"}}')
        with pytest.raises(ShapeError):
            parse_assignment('{}')


class TestSourceProblemDocuments:
    def test_x3c_round_trip(self):
        inst = X3CInstance(
            ["u1", "u2", "u3", "u4", "u5", "u6"],
            [("u1", "u2", "u3"), ("u2", "u4", "u6")],
        )
        assert parse_x3c(render_x3c(inst)) == inst

    def test_3dm_round_trip_preserves_order(self):
        inst = R3DMInstance(
            ["w2", "w1"],
            ["x1", "x9"],
            ["y1", "y2"],
            [("w2", "x9", "y1"), ("w1", "x1", "y2")],
        )
        back = parse_3dm(render_3dm(inst))
        assert back == inst
        assert back.w_side == ("w2", "w1")
        assert back.triples == inst.triples

    def test_sat_round_trip(self):
        inst = OneInThreeSatInstance(
            ["x1", "x2", "x3"], [("x1", "x2", "x3")] * 3
        )
        assert parse_sat(render_sat(inst)) == inst

    def test_rejections(self):
        with pytest.raises(ShapeError):
            parse_x3c('{"universe": ["u1"], "triples": "zz"}')
        with pytest.raises(ShapeError):
            parse_x3c('{"universe": ["u1", "u2", "u3"], "triples": [["u1", 2, "u3"]]}')
        with pytest.raises(ShapeError):
            parse_3dm('{"W": ["w1"], "X": ["x1"], "Y": ["y1"], "S": [["w1", "x1"]]}')
        with pytest.raises(ShapeError):
            parse_sat('{"variables": ["x1"], "clauses": [["x1"]]}')


@given(seed=st.integers(min_value=0, max_value=10**9))
@settings(max_examples=200, deadline=None)
def test_random_instances_round_trip(seed):
    rng = random.Random(seed)
    rule = rng.choice(ALL_RULES[:5] + [Condorcet(), E1(), E2()])
    params = RandomInstanceParams(
        districts=rng.randint(1, 3),
        additional=rng.randint(0, 3),
        rule=rule,
        bound=rng.choice([AtMost(1), AtMost(3), UNBOUNDED]),
        priced=bool(rng.getrandbits(1)),
    )
    inst = random_instance(params, seed)
    text = render_instance(inst)
    assert parse_instance(text) == inst
    assert render_instance(parse_instance(text)) == text
