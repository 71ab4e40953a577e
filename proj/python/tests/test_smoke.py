# Copyright 2026 The GDLZ Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import gdlz

FIG2_JOINTS = [
    "reduce^Player1(1,5);noop^Player2()",
    "noop^Player1();reduce^Player2(2,2)",
    "reduce^Player1(2,1);noop^Player2()",
]


def test_parse_print_roundtrip():
    f = gdlz.parse_formula("vals(0,0) and not turn(p1)")
    assert gdlz.parse_formula(str(f)) == f
    assert gdlz.count_atoms(f) == 2
    assert gdlz.is_core(gdlz.desugar(gdlz.parse_formula("a implies b")))
    with pytest.raises(gdlz.ParseError):
        gdlz.parse_formula("vals(0,")


def test_nim_replay():
    model, rules = gdlz.make_nim([5, 3])
    assert model.vars == ["heap_1", "heap_2"]
    p = model.build_path(FIG2_JOINTS)
    assert p.complete
    assert [p.vals(j) for j in range(4)] == [[5, 3], [0, 3], [0, 1], [0, 0]]
    assert gdlz.holds(p, 3, "wins(Player1)")
    assert not gdlz.holds(p, 3, "wins(Player2)")
    assert gdlz.holds(p, 0, "does(reduce^Player1(1, add(2,3)))")
    verdict = gdlz.is_model_of(model, rules, max_depth=8)
    assert verdict["status"] == "holds"


def test_path_translation():
    model, _ = gdlz.make_nim([5, 3])
    p = model.build_path(FIG2_JOINTS)
    art = gdlz.translate_model_path(p)
    assert len(art.action_map) == 5
    assert art.model.vars == []
    tf = gdlz.translate_formula_path(gdlz.parse_formula("vals(5,3)"), p, 0, art)
    assert str(tf) == "heap_1(5) and heap_2(3)"
    assert gdlz.holds(art.translated_path, 0, tf)


def test_complete_translation_and_analysis():
    model, rules = gdlz.make_nim([2, 2])
    art = gdlz.translate_model_complete(model, 0, 2)
    assert len(art.action_map) == 10
    # The update schemas carry sub() terms that dip to -1.
    rep = gdlz.analyze_complete_mode(rules, model, -1, 2)
    assert rep.source_count == 278
    assert rep.theorem3_inequality

    probe = gdlz.rules_from_text("vals(0,0)\n")
    p = model.build_path(
        ["reduce^Player1(1,2);noop^Player2()",
         "noop^Player1();reduce^Player2(2,2)"])
    prep = gdlz.analyze_path_mode(probe, p, 0)
    assert (prep.source_count, prep.translated_count) == (1, 2)
    assert prep.match


def test_model_text_roundtrip():
    model, _ = gdlz.make_nim([2])
    text = model.to_text()
    again = gdlz.model_from_text(text)
    assert again.to_text() == text
    paths, truncated = again.enumerate_complete_paths(max_depth=4)
    assert not truncated
    assert len(paths) == 2
