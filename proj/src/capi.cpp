// Copyright 2026 The Legendrian Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "legendrian/legendrian.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <utility>

#include "legendrian/augmentation.hpp"
#include "legendrian/dga.hpp"
#include "legendrian/dipped.hpp"
#include "legendrian/error.hpp"
#include "legendrian/front.hpp"
#include "legendrian/moves.hpp"
#include "legendrian/normal_forms.hpp"
#include "legendrian/ruling.hpp"

namespace lg = legendrian;

struct lg_front {
  lg::MarkedFront front;
};

struct DgaData {
  lg::FrontDiagram front;
  lg::ResolvedDGA dga;
};

struct lg_dga {
  std::shared_ptr<const DgaData> data;
};

struct lg_augs {
  std::shared_ptr<const DgaData> data;
  lg::AugmentationClasses classes;
};

struct lg_rulings {
  lg::RulingSummary summary;
};

struct lg_mcs {
  lg::Mcs mcs;
};

namespace {

thread_local std::string last_error;

lg_status fail_with(lg_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

lg_status bad_argument(const char* what) {
  return fail_with(LG_ERR_ARGUMENT, what);
}

// Runs `body`, mapping exceptions to status codes.
template <typename F>
lg_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return LG_OK;
  } catch (const lg::Error& e) {
    return fail_with(static_cast<lg_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail_with(LG_ERR_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail_with(LG_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string to_bits(const lg::Augmentation& e) {
  std::string s;
  for (bool b : e) s += b ? '1' : '0';
  return s;
}

lg::Augmentation from_bits(const char* bits, std::size_t size) {
  const std::string s(bits);
  if (s.size() != size)
    lg::fail(lg::ErrorCode::kDimension,
             "augmentation needs " + std::to_string(size) + " values");
  lg::Augmentation e;
  for (char c : s) {
    if (c != '0' && c != '1')
      lg::fail(lg::ErrorCode::kSyntax, "augmentation values are 0 or 1");
    e.push_back(c == '1');
  }
  return e;
}

}  // namespace

extern "C" {

const char* lg_last_error(void) { return last_error.c_str(); }

const char* lg_status_name(lg_status status) {
  switch (status) {
    case LG_OK:
      return "ok";
    case LG_ERR_ARGUMENT:
      return "argument";
    case LG_ERR_MEMORY:
      return "memory";
    default:
      if (status >= LG_ERR_SYNTAX && status <= LG_ERR_INTERNAL)
        return lg::error_code_name(static_cast<lg::ErrorCode>(status));
      return "unknown";
  }
}

void lg_string_free(char* s) { std::free(s); }

lg_status lg_front_parse(const char* text, lg_front** out) {
  if (!text || !out) return bad_argument("null argument");
  return guarded([&] { *out = new lg_front{lg::parse_front(text)}; });
}

void lg_front_free(lg_front* front) { delete front; }

lg_status lg_front_serialize(const lg_front* front, char** out) {
  if (!front || !out) return bad_argument("null argument");
  return guarded([&] { *out = copy_string(front->front.serialize()); });
}

lg_status lg_front_info(const lg_front* front, size_t* events, size_t* marks,
                        int* two_bridge) {
  if (!front) return bad_argument("null front");
  return guarded([&] {
    const lg::MarkedFront& f = front->front;
    if (events) *events = f.size();
    if (marks) *marks = static_cast<size_t>(f.mark_count());
    if (two_bridge) *two_bridge = lg::is_two_bridge(f.underlying()) ? 1 : 0;
  });
}

lg_status lg_front_underlying(const lg_front* front, lg_front** out) {
  if (!front || !out) return bad_argument("null argument");
  return guarded([&] { *out = new lg_front{front->front.underlying()}; });
}

lg_status lg_dga_new(const lg_front* front, lg_dga** out) {
  if (!front || !out) return bad_argument("null argument");
  return guarded([&] {
    if (front->front.has_marks())
      lg::fail(lg::ErrorCode::kPrecondition, "the DGA needs an unmarked front");
    auto data = std::make_shared<DgaData>(
        DgaData{front->front, lg::differential(front->front)});
    *out = new lg_dga{std::move(data)};
  });
}

void lg_dga_free(lg_dga* dga) { delete dga; }

size_t lg_dga_generator_count(const lg_dga* dga) {
  return dga ? dga->data->dga.generators.size() : 0;
}

lg_status lg_dga_generator(const lg_dga* dga, int id, lg_generator* out) {
  if (!dga || !out) return bad_argument("null argument");
  if (id < 1 || id > dga->data->dga.size()) return bad_argument("no such generator");
  const lg::Generator& g = dga->data->dga.gen(id);
  out->id = g.id;
  out->kind = g.kind == lg::GeneratorKind::kCrossing ? LG_GEN_CROSSING
                                                     : LG_GEN_RIGHT_CUSP;
  out->pos = g.pos;
  out->grading = g.grading;
  out->event = g.event;
  return LG_OK;
}

lg_status lg_dga_differential(const lg_dga* dga, int id, char** out) {
  if (!dga || !out) return bad_argument("null argument");
  if (id < 1 || id > dga->data->dga.size()) return bad_argument("no such generator");
  return guarded(
      [&] { *out = copy_string(lg::poly_to_string(dga->data->dga.d(id))); });
}

lg_status lg_dga_has_term(const lg_dga* dga, int id, const int* letters,
                          size_t len, int* out) {
  if (!dga || !out || (len > 0 && !letters)) return bad_argument("null argument");
  if (id < 1 || id > dga->data->dga.size()) return bad_argument("no such generator");
  return guarded([&] {
    const lg::Word w(letters, letters + len);
    *out = dga->data->dga.d(id).contains(w) ? 1 : 0;
  });
}

lg_status lg_dga_check_d_squared(const lg_dga* dga, int* ok) {
  if (!dga || !ok) return bad_argument("null argument");
  return guarded([&] { *ok = lg::check_d_squared(dga->data->dga) ? 1 : 0; });
}

lg_status lg_augs_new(const lg_dga* dga, int jobs, lg_augs** out) {
  if (!dga || !out) return bad_argument("null argument");
  return guarded([&] {
    auto classes = lg::partition_classes(dga->data->dga, jobs < 1 ? 1 : jobs);
    *out = new lg_augs{dga->data, std::move(classes)};
  });
}

void lg_augs_free(lg_augs* augs) { delete augs; }

size_t lg_augs_count(const lg_augs* augs) {
  return augs ? augs->classes.augmentations.size() : 0;
}

size_t lg_augs_class_count(const lg_augs* augs) {
  return augs ? augs->classes.classes.size() : 0;
}

lg_status lg_augs_get(const lg_augs* augs, size_t index, char** out) {
  if (!augs || !out) return bad_argument("null argument");
  if (index >= augs->classes.augmentations.size())
    return bad_argument("no such augmentation");
  return guarded(
      [&] { *out = copy_string(to_bits(augs->classes.augmentations[index])); });
}

lg_status lg_augs_class_of(const lg_augs* augs, size_t index, int* class_index) {
  if (!augs || !class_index) return bad_argument("null argument");
  if (index >= augs->classes.augmentations.size())
    return bad_argument("no such augmentation");
  *class_index = augs->classes.class_of[index];
  return LG_OK;
}

lg_status lg_augs_classify(const lg_augs* augs, const char* bits,
                           int* class_index) {
  if (!augs || !bits || !class_index) return bad_argument("null argument");
  return guarded([&] {
    const lg::ResolvedDGA& dga = augs->data->dga;
    const lg::Augmentation e = from_bits(bits, dga.generators.size());
    if (!lg::is_augmentation(dga, e))
      lg::fail(lg::ErrorCode::kPrecondition, "not an augmentation");
    *class_index = lg::class_index(dga, augs->classes, e);
  });
}

lg_status lg_rulings_new(const lg_front* front, lg_rulings** out) {
  if (!front || !out) return bad_argument("null argument");
  return guarded([&] {
    if (front->front.has_marks())
      lg::fail(lg::ErrorCode::kPrecondition, "rulings need an unmarked front");
    *out = new lg_rulings{lg::summarize_rulings(front->front)};
  });
}

void lg_rulings_free(lg_rulings* rulings) { delete rulings; }

size_t lg_rulings_count(const lg_rulings* rulings) {
  return rulings ? rulings->summary.rulings.size() : 0;
}

lg_status lg_rulings_switches(const lg_rulings* rulings, size_t index,
                              char** out) {
  if (!rulings || !out) return bad_argument("null argument");
  if (index >= rulings->summary.rulings.size()) return bad_argument("no such ruling");
  return guarded([&] {
    std::string s;
    for (int c : rulings->summary.rulings[index].switches) {
      if (!s.empty()) s += ' ';
      s += std::to_string(c);
    }
    *out = copy_string(s);
  });
}

lg_status lg_rulings_nu(const lg_rulings* rulings, size_t index, int* nu) {
  if (!rulings || !nu) return bad_argument("null argument");
  if (index >= rulings->summary.rulings.size()) return bad_argument("no such ruling");
  *nu = rulings->summary.nu.empty() ? -1 : rulings->summary.nu[index];
  return LG_OK;
}

lg_status lg_rulings_total(const lg_rulings* rulings, long long* total) {
  if (!rulings || !total) return bad_argument("null argument");
  if (!rulings->summary.nu_defined)
    return fail_with(LG_ERR_NOT_TWO_BRIDGE,
                     "sum of 2^nu needs at most two left cusps");
  *total = rulings->summary.total;
  return LG_OK;
}

lg_status lg_mcs_new(const lg_front* front, lg_mcs** out) {
  if (!front || !out) return bad_argument("null argument");
  return guarded([&] { *out = new lg_mcs{lg::reconstruct(front->front)}; });
}

void lg_mcs_free(lg_mcs* mcs) { delete mcs; }

lg_status lg_mcs_serialize(const lg_mcs* mcs, char** out) {
  if (!mcs || !out) return bad_argument("null argument");
  return guarded([&] { *out = copy_string(mcs->mcs.front.serialize()); });
}

lg_status lg_mcs_from_augmentation(const lg_augs* augs, const char* bits,
                                   lg_mcs** out) {
  if (!augs || !bits || !out) return bad_argument("null argument");
  return guarded([&] {
    const DgaData& d = *augs->data;
    const lg::Augmentation e = from_bits(bits, d.dga.generators.size());
    *out = new lg_mcs{lg::aug_to_mcs(e, d.front, d.dga)};
  });
}

lg_status lg_mcs_normal_form(const lg_mcs* mcs, lg_normal_form form,
                             lg_mcs** out, char** journal) {
  if (!mcs || !out) return bad_argument("null argument");
  return guarded([&] {
    lg::NormalForm nf;
    switch (form) {
      case LG_FORM_SR_BAR:
        nf = lg::sr_bar_form(mcs->mcs);
        break;
      case LG_FORM_A:
        nf = lg::a_form(mcs->mcs);
        break;
      case LG_FORM_SRG:
        nf = lg::srg_form(mcs->mcs);
        break;
      default:
        lg::fail(lg::ErrorCode::kPrecondition, "unknown normal form");
    }
    std::string text = lg::format_journal(nf.journal);
    auto result = std::make_unique<lg_mcs>(lg_mcs{std::move(nf.mcs)});
    if (journal) *journal = copy_string(text);
    *out = result.release();
  });
}

lg_status lg_mcs_replay(const lg_mcs* mcs, const char* journal, lg_mcs** out) {
  if (!mcs || !journal || !out) return bad_argument("null argument");
  return guarded([&] {
    *out = new lg_mcs{lg::replay(mcs->mcs, lg::parse_journal(journal))};
  });
}

lg_status lg_mcs_psi(const lg_mcs* mcs, const lg_augs* augs, char** bits,
                     int* class_index) {
  if (!mcs || !augs || !class_index) return bad_argument("null argument");
  return guarded([&] {
    if (!(mcs->mcs.front.underlying() == augs->data->front))
      lg::fail(lg::ErrorCode::kPrecondition,
               "augmentations belong to a different front");
    const lg::PsiValue v = lg::psi(mcs->mcs, augs->data->dga, augs->classes);
    std::string text = to_bits(v.augmentation);
    if (bits) *bits = copy_string(text);
    *class_index = v.class_index;
  });
}

lg_status lg_mcs_check_dipped(const lg_mcs* mcs, int* ok) {
  if (!mcs || !ok) return bad_argument("null argument");
  return guarded([&] {
    const lg::DippedAugmentation da = lg::mcs_to_dipped_aug(mcs->mcs);
    *ok = lg::check_dipped_augmentation(da.diagram, da.valuation) ? 1 : 0;
  });
}

lg_status lg_mcs_dipped_homotopic(const lg_mcs* a, const lg_mcs* b,
                                  int* homotopic, char** witness) {
  if (!a || !b || !homotopic) return bad_argument("null argument");
  return guarded([&] {
    const lg::AlignedPair p = lg::align(a->mcs, b->mcs);
    const lg::HomotopySearch r =
        lg::find_dipped_homotopy(p.diagram, p.first, p.second);
    std::string text;
    for (const std::string& line : r.contradiction) text += line + "\n";
    if (witness) *witness = copy_string(text);
    *homotopic = r.homotopy ? 1 : 0;
  });
}

}  // extern "C"
