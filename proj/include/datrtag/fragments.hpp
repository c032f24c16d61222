#pragma once

// Built-in fragments and their golden cases. The text mirrors the files
// under data/ and is refreshed by tools/embed_fragments.py; tests check that
// the two stay identical.

#include <string>
#include <string_view>
#include <vector>

#include "datrtag/error.hpp"
#include "datrtag/golden.hpp"
#include "datrtag/syntax.hpp"
#include "datrtag/theory.hpp"

namespace datrtag {

namespace fragment_text {

inline constexpr std::string_view figure1 = R"datr(% Tree-node hierarchy and verb classes for a small LTAG lexicon.
% Each entry encodes its elementary tree from the principal anchor using
% the parent, left and right relations.

TREE_NODE:
    <> == undef
    <type> == normal.

S_TREE:
    <> == TREE_NODE
    <cat> == s.

VP_TREE:
    <> == TREE_NODE
    <cat> == vp
    <parent> == S_TREE:<>
    <left> == NP_TREE:<>.

PP_TREE:
    <> == TREE_NODE
    <cat> == pp.

P_TREE:
    <> == TREE_NODE
    <cat> == p
    <type> == anchor
    <parent> == PP_TREE:<>
    <right> == NP_TREE:<>.

NP_TREE:
    <> == TREE_NODE
    <cat> == np
    <type> == substitution.

INTRANS_VERB:
    <> == TREE_NODE
    <cat> == v
    <type> == anchor
    <parent> == VP_TREE:<>.

TRANS_VERB:
    <> == INTRANS_VERB
    <right> == NP_TREE:<>.

DITRANS_VERB:
    <> == TRANS_VERB
    <right right> == P_TREE:<>
    <right right root> == to.

DOUBLEOBJ_VERB:
    <> == TRANS_VERB
    <right right> == NP_TREE:<>.

Die:
    <> == INTRANS_VERB
    <root> == die.

Eat:
    <> == TRANS_VERB
    <root> == eat.

Give:
    <> == DITRANS_VERB
    <root> == give.
)datr";

inline constexpr std::string_view extended = R"datr(% The base hierarchy extended with the dative alternation, the auxiliary
% classes driven by the <form> trigger, and a passive that drops the object.

TREE_NODE:
    <> == undef
    <type> == normal
    <form> == active.

S_TREE:
    <> == TREE_NODE
    <cat> == s.

VP_TREE:
    <> == TREE_NODE
    <cat> == vp
    <parent> == S_TREE:<>
    <left> == NP_TREE:<>.

PP_TREE:
    <> == TREE_NODE
    <cat> == pp.

P_TREE:
    <> == TREE_NODE
    <cat> == p
    <type> == anchor
    <parent> == PP_TREE:<>
    <right> == NP_TREE:<>.

NP_TREE:
    <> == TREE_NODE
    <cat> == np
    <type> == substitution.

INTRANS_VERB:
    <> == TREE_NODE
    <cat> == v
    <type> == anchor
    <parent> == VP_TREE:<>.

% The object NP exists only while the entry's form is active.
TRANS_VERB:
    <> == INTRANS_VERB
    <right> == <right_form "<form>">
    <right_form active> == NP_TREE:<>
    <right_form passive> == undef.

% The alternation keeps the morphological root of the entry being queried.
DITRANS_VERB:
    <> == TRANS_VERB
    <right right> == P_TREE:<>
    <right right root> == to
    <alt dative> == DOUBLEOBJ_VERB:<>
    <alt dative root> == "<root>".

DOUBLEOBJ_VERB:
    <> == TRANS_VERB
    <right right> == NP_TREE:<>.

AUX_VERB:
    <> == INTRANS_VERB
    <aux> == true
    <parent> == AUX_TREE:<>
    <right> == AUX_TREE:<>
    <right type> == foot.

AUX_TREE:
    <> == TREE_NODE
    <cat> == <aux_cat "<form>">
    <aux_cat> == vp
    <aux_cat inv> == s.

Die:
    <> == INTRANS_VERB
    <root> == die.

Eat:
    <> == TRANS_VERB
    <root> == eat.

Give:
    <> == DITRANS_VERB
    <root> == give.

% Toolkit additions: an auxiliary and a second intransitive entry.
Will:
    <> == AUX_VERB
    <root> == will.

Sleep:
    <> == INTRANS_VERB
    <root> == sleep.
)datr";

inline constexpr std::string_view figure1_golden = R"datr(# Golden cases for the base fragment.
#   Q <node> <path> => <atoms>
#   T <entry> [rule=<r>] [set <path>=<atom>]* => <bracketed tree>

# The subcategorization frame of Give, spelled out flat.
Q Give <cat> => v
Q Give <right cat> => np
Q Give <parent cat> => vp
Q Give <parent left cat> => np
Q Give <parent parent cat> => s
Q Give <right right cat> => p
Q Give <right right parent cat> => pp
Q Give <right right right cat> => np

Q Give <root> => give
Q Give <right right root> => to
Q Give <type> => anchor
Q Give <right type> => substitution
Q Give <parent parent parent cat> => undef
Q Eat <colour> => undef
Q Die <right cat> => undef

T Die => (s np! (vp v@=die))
T Eat => (s np! (vp v@=eat np!))
T Give => (s np! (vp v@=give np! (pp p@=to np!)))
)datr";

inline constexpr std::string_view extended_golden = R"datr(# Golden cases for the extended fragment.
#   Q <node> <path> => <atoms>
#   T <entry> [rule=<r>] [set <path>=<atom>]* => <bracketed tree>

Q Give <cat> => v
Q Give <parent parent cat> => s
Q Give <right right parent cat> => pp
Q Give <form> => active
Q Give <alt dative cat> => v
Q Give <alt dative right right cat> => np
Q Give <alt dative root> => give
Q Will <cat> => v
Q Will <parent cat> => vp
Q Will <right cat> => vp
Q Will <right type> => foot
Q Will <aux> => true
Q Eat <right cat> => np

T Die => (s np! (vp v@=die))
T Eat => (s np! (vp v@=eat np!))
T Give => (s np! (vp v@=give np! (pp p@=to np!)))
T Sleep => (s np! (vp v@=sleep))
T Will => (vp v@=will vp*)

T Give rule=dative => (s np! (vp v@=give np! np!))
T Will rule=sai => (s v@=will s*)
T Eat rule=passive => (s np! (vp v@=eat))
T Eat set <right form>=null => (s np! (vp v@=eat np{form=null}!))
T Eat rule=whq set <right form>=null => (s np{form=wh}! (s np! (vp v@=eat np{form=null}!)))
T Eat rule=whq set <parent left form>=null => (s np{form=wh}! (s np{form=null}! (vp v@=eat np!)))
)datr";

}  // namespace fragment_text

inline const std::vector<std::string_view>& fragment_names() {
  static const std::vector<std::string_view> names{"figure1", "extended"};
  return names;
}

inline bool is_fragment_name(std::string_view name) {
  return name == "figure1" || name == "extended";
}

/// Theory source of a built-in fragment. Throws UnknownFragment.
inline std::string_view fragment_source(std::string_view name) {
  if (name == "figure1") return fragment_text::figure1;
  if (name == "extended") return fragment_text::extended;
  throw UnknownFragment(std::string(name));
}

inline std::string_view golden_source(std::string_view name) {
  if (name == "figure1") return fragment_text::figure1_golden;
  if (name == "extended") return fragment_text::extended_golden;
  throw UnknownFragment(std::string(name));
}

inline Theory load_fragment(std::string_view name) { return parse_theory(fragment_source(name)); }

inline std::vector<GoldenCase> golden_cases(std::string_view name) {
  return parse_golden(golden_source(name));
}

}  // namespace datrtag
