#ifndef EVEX_EVEX_HPP_
#define EVEX_EVEX_HPP_

#include "evex/adaptation.hpp"
#include "evex/error.hpp"
#include "evex/eval.hpp"
#include "evex/lemma.hpp"
#include "evex/lexicon.hpp"
#include "evex/ner.hpp"
#include "evex/ontology.hpp"
#include "evex/pipeline.hpp"
#include "evex/reverb.hpp"
#include "evex/rules.hpp"
#include "evex/text.hpp"
#include "evex/tokenize.hpp"
#include "evex/triple.hpp"

#endif  // EVEX_EVEX_HPP_
