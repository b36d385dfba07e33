import io
import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bolpunjabi import (
    Candidate,
    Chunk,
    ReorderRule,
    RuleFormatError,
    Token,
    TokenKind,
    UnsupportedDirectionError,
    assemble,
    load_rules,
    reorder,
    select_candidate,
    substitute,
    tokenize,
    translate_sentence,
)
from bolpunjabi.text import Script

GOLDEN_IN = "Who did this?"
GOLDEN_OUT = "ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?"
NAIVE_OUT = "ਕਿਸ ਨੇ ਕੀਤਾ ਇਹ?"


def word(surface, index=0):
    return Token(surface, TokenKind.WORD, Script.LATIN, index)


def chunk(gurmukhi, role, oov=False, surface="x"):
    return Chunk(word(surface), gurmukhi, role, oov)


# --- select_candidate -------------------------------------------------------

YOU_CANDIDATES = [
    Candidate("ਤੁਸੀ", frozenset({"role=PRONOUN", "number=PLURAL",
                                "register=FORMAL"}), 0),
    Candidate("ਤੂੰ", frozenset({"role=PRONOUN", "number=SINGULAR",
                               "register=INFORMAL"}), 1),
]


def test_plural_context_selects_plural_candidate():
    context = tokenize("You all did this?")
    got = select_candidate(context[0], YOU_CANDIDATES, context)
    assert got.gurmukhi == "ਤੁਸੀ"


def test_single_candidate_wins_regardless_of_context():
    did = [Candidate("ਕੀਤਾ", frozenset({"role=VERB"}), 0)]
    for sentence in ("Who did this?", "they all did", "did"):
        context = tokenize(sentence)
        token = next(t for t in context if t.surface == "did")
        assert select_candidate(token, did, context).gurmukhi == "ਕੀਤਾ"


def test_fallback_to_lowest_priority_when_nothing_matches():
    candidates = [
        Candidate("ਤੇਰਾ", frozenset({"register=INFORMAL"}), 0),
        Candidate("ਤੁਹਾਡਾ", frozenset({"register=INFORMAL"}), 1),
    ]
    context = tokenize("your book")
    # default register=FORMAL conflicts with both: fallback to priority 0
    assert select_candidate(context[0], candidates, context).gurmukhi == "ਤੇਰਾ"


def test_formal_default_skips_informal_candidate():
    candidates = [
        Candidate("ਤੇਰਾ", frozenset({"register=INFORMAL"}), 0),
        Candidate("ਤੁਹਾਡਾ", frozenset({"register=FORMAL"}), 1),
    ]
    context = tokenize("your book")
    assert select_candidate(context[0], candidates, context).gurmukhi == "ਤੁਹਾਡਾ"


def test_plural_noun_in_lexicon_acts_as_cue(lexicon):
    context = tokenize("you cats did this?")
    got = select_candidate(context[0], YOU_CANDIDATES, context, lexicon=lexicon)
    assert got.gurmukhi == "ਤੁਸੀ"


def test_question_mark_has_no_effect_on_number():
    with_q = tokenize("you did this?")
    without_q = tokenize("you did this")
    assert (
        select_candidate(with_q[0], YOU_CANDIDATES, with_q).gurmukhi
        == select_candidate(without_q[0], YOU_CANDIDATES, without_q).gurmukhi
    )


def test_selection_deterministic(lexicon):
    context = tokenize("You all did this?")
    picks = {
        select_candidate(context[0], YOU_CANDIDATES, context,
                         lexicon=lexicon).gurmukhi
        for _ in range(20)
    }
    assert picks == {"ਤੁਸੀ"}


# --- substitute -------------------------------------------------------------

def test_substitute_demo_sentence(lexicon):
    chunks = substitute(tokenize(GOLDEN_IN), lexicon)
    assert [(c.gurmukhi, c.role) for c in chunks] == [
        ("ਕਿਸ ਨੇ", "WH"), ("ਕੀਤਾ", "VERB"), ("ਇਹ", "OBJECT"), ("?", "PUNCT"),
    ]
    assert assemble(chunks) == NAIVE_OUT


def test_substitute_empty(lexicon):
    assert substitute([], lexicon) == []


def test_substitute_oov_passthrough(lexicon):
    chunks = substitute(tokenize("zebra ?"), lexicon)
    assert chunks[0].gurmukhi == "zebra"
    assert chunks[0].role == "OOV"
    assert chunks[0].oov is True
    assert chunks[1].role == "PUNCT"
    assert chunks[1].oov is False


def test_substitute_one_chunk_per_token_in_source_order(lexicon):
    tokens = tokenize("you did not see this?")
    chunks = substitute(tokens, lexicon)
    assert len(chunks) == len(tokens)
    assert [c.source for c in chunks] == tokens


def test_oov_flag_matches_lexicon_membership(lexicon):
    chunks = substitute(tokenize("Who did zebra?"), lexicon)
    for c in chunks:
        if c.role == "PUNCT":
            continue
        if c.oov:
            assert lexicon.lookup(c.source.surface) == []
        else:
            assert c.gurmukhi in [
                x.gurmukhi for x in lexicon.lookup(c.source.surface)
            ]


# --- reorder ----------------------------------------------------------------

WH_FRONTING = ReorderRule("wh-fronting", ("WH", "VERB", "OBJECT"), (2, 0, 1))


def test_wh_fronting_reorders_and_reports():
    chunks = [
        chunk("ਕਿਸ ਨੇ", "WH"), chunk("ਕੀਤਾ", "VERB"),
        chunk("ਇਹ", "OBJECT"), chunk("?", "PUNCT"),
    ]
    got, applied = reorder(chunks, [WH_FRONTING])
    assert [c.gurmukhi for c in got] == ["ਇਹ", "ਕਿਸ ਨੇ", "ਕੀਤਾ", "?"]
    assert applied == ["wh-fronting"]


def test_no_match_returns_identity():
    chunks = [chunk("ਹਾਂ", "NOUN"), chunk("ਹਾਂ", "NOUN")]
    got, applied = reorder(chunks, [WH_FRONTING])
    assert got == chunks
    assert applied == []


def test_first_matching_rule_wins():
    rules = [
        ReorderRule("second", ("WH", "VERB"), (1, 0)),
        ReorderRule("first", ("WH", "VERB"), (0, 1)),
    ]
    chunks = [chunk("ਕੀ", "WH"), chunk("ਹੈ", "VERB")]
    _, applied = reorder(chunks, rules)
    assert applied == ["second"]


def test_oov_matches_object_slot():
    chunks = [
        chunk("ਕਿਸ ਨੇ", "WH"), chunk("ਕੀਤਾ", "VERB"),
        chunk("zebra", "OOV", oov=True), chunk("?", "PUNCT"),
    ]
    got, applied = reorder(chunks, [WH_FRONTING])
    assert applied == ["wh-fronting"]
    assert [c.gurmukhi for c in got] == ["zebra", "ਕਿਸ ਨੇ", "ਕੀਤਾ", "?"]


def test_non_punct_tail_blocks_match():
    chunks = [
        chunk("ਕਿਸ ਨੇ", "WH"), chunk("ਕੀਤਾ", "VERB"),
        chunk("ਇਹ", "OBJECT"), chunk("ਘਰ", "NOUN"),
    ]
    _, applied = reorder(chunks, [WH_FRONTING])
    assert applied == []


_ROLES = ["WH", "VERB", "PRONOUN", "NOUN", "OBJECT", "PUNCT", "OOV"]


def random_rule(rng: random.Random) -> ReorderRule:
    size = rng.randint(2, 4)
    pattern = tuple(rng.choice(_ROLES[:-1]) for _ in range(size))
    permutation = list(range(size))
    rng.shuffle(permutation)
    return ReorderRule(f"r{rng.randrange(1000)}", pattern, tuple(permutation))


def random_chunks(rng: random.Random) -> list[Chunk]:
    return [
        chunk(f"g{i}", rng.choice(_ROLES), surface=f"s{i}")
        for i in range(rng.randint(0, 6))
    ]


def test_reorder_permutation_property_seeded():
    rng = random.Random(1234)
    for _ in range(2000):
        chunks = random_chunks(rng)
        rules = [random_rule(rng) for _ in range(rng.randint(0, 4))]
        got, _ = reorder(chunks, rules)
        assert Counter((c.gurmukhi, c.role) for c in got) == Counter(
            (c.gurmukhi, c.role) for c in chunks
        )
        assert len(got) == len(chunks)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_reorder_permutation_property_hypothesis(data):
    roles = st.sampled_from(_ROLES)
    chunks = [
        chunk(f"g{i}", role, surface=f"s{i}")
        for i, role in enumerate(data.draw(st.lists(roles, max_size=6)))
    ]
    seed = data.draw(st.integers(min_value=0, max_value=10_000))
    rng = random.Random(seed)
    rules = [random_rule(rng) for _ in range(rng.randint(0, 3))]
    got, _ = reorder(chunks, rules)
    assert Counter((c.gurmukhi, c.role) for c in got) == Counter(
        (c.gurmukhi, c.role) for c in chunks
    )


# --- rule loading -----------------------------------------------------------

def test_load_rules_happy_path():
    rules = load_rules("wh-fronting\tWH,VERB,OBJECT\t2,0,1\n")
    assert rules == [WH_FRONTING]


def test_load_rules_accepts_stream_and_comments():
    rules = load_rules(io.StringIO("# comment\n\nr\tWH,VERB\t1,0\n"))
    assert rules[0].name == "r"


@pytest.mark.parametrize(
    "line, fragment",
    [
        ("bad\tWH,VERB\t0,2", "not a permutation"),
        ("bad\tWH,VERB\t0", "not a permutation"),
        ("bad\tWH\t0", "shorter than 2"),
        ("bad\tWH,NOPE\t0,1", "unknown roles"),
        ("bad\tWH,VERB\tx,y", "invalid permutation"),
        ("bad\tWH,VERB", "3 tab-separated fields"),
    ],
)
def test_invalid_rules_rejected_at_load(line, fragment):
    with pytest.raises(RuleFormatError) as err:
        load_rules(line + "\n")
    assert fragment in str(err.value)


# --- translate_sentence -----------------------------------------------------

def test_golden_translation(engine):
    result = engine.translate(GOLDEN_IN)
    assert result.text == GOLDEN_OUT
    assert list(result.applied_rules) == ["wh-fronting"]
    assert result.oov_count == 0


def test_single_token_translation(engine):
    assert engine.translate("did").text == "ਕੀਤਾ"


def test_oov_keeps_object_position(engine):
    result = engine.translate("Who did zebra?")
    assert result.oov_count == 1
    assert result.text == "zebra ਕਿਸ ਨੇ ਕੀਤਾ?"
    assert [c.gurmukhi for c in result.chunks][0] == "zebra"


def test_empty_translation(engine):
    result = engine.translate("")
    assert result.text == ""
    assert result.chunks == ()
    assert result.oov_count == 0


def test_numbers_translate_to_punjabi_words(engine):
    result = engine.translate("2")
    assert result.text == "ਦੋ"


def test_gurmukhi_input_rejected(engine):
    with pytest.raises(UnsupportedDirectionError):
        engine.translate("ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?")


def test_mixed_input_rejected(engine):
    with pytest.raises(UnsupportedDirectionError):
        engine.translate("who ਕੀਤਾ this?")


def test_translation_deterministic(engine):
    results = {engine.translate(GOLDEN_IN).text for _ in range(10)}
    assert results == {GOLDEN_OUT}


def test_text_field_matches_assembly_invariant(engine):
    for sentence in (GOLDEN_IN, "I eat bread.", "hello", "zebra!", ""):
        result = engine.translate(sentence)
        assert result.text == assemble(list(result.chunks))
        assert result.oov_count == sum(1 for c in result.chunks if c.oov)


def test_svo_reorders_to_sov(engine):
    result = engine.translate("I eat bread.")
    assert result.text == "ਮੈਂ ਰੋਟੀ ਖਾਓ."
    assert list(result.applied_rules) == ["svo-to-sov"]
