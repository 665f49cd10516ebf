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

// legendrian dga|invariants|mcs <subcmd> [--json] [--jobs N] FILE
//
// Exit status: 0 when every requested check passes, 1 when a check fails,
// 2 on unreadable or invalid input.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "legendrian/legendrian.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

struct Failure {
  lg_status status;
  std::string message;
};

void check(lg_status s) {
  if (s != LG_OK) throw Failure{s, lg_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Front = std::unique_ptr<lg_front, Deleter<lg_front, lg_front_free>>;
using Dga = std::unique_ptr<lg_dga, Deleter<lg_dga, lg_dga_free>>;
using Augs = std::unique_ptr<lg_augs, Deleter<lg_augs, lg_augs_free>>;
using Rulings = std::unique_ptr<lg_rulings, Deleter<lg_rulings, lg_rulings_free>>;
using McsPtr = std::unique_ptr<lg_mcs, Deleter<lg_mcs, lg_mcs_free>>;

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out(s ? s : "");
  lg_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{LG_ERR_ARGUMENT, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Front parse(const std::string& text) {
  lg_front* f = nullptr;
  check(lg_front_parse(text.c_str(), &f));
  return Front(f);
}

Front underlying(const lg_front* f) {
  lg_front* u = nullptr;
  check(lg_front_underlying(f, &u));
  return Front(u);
}

std::string serialize(const lg_front* f) {
  char* s = nullptr;
  check(lg_front_serialize(f, &s));
  return take(s);
}

std::string serialize(const lg_mcs* m) {
  char* s = nullptr;
  check(lg_mcs_serialize(m, &s));
  return take(s);
}

Dga make_dga(const lg_front* f) {
  lg_dga* d = nullptr;
  check(lg_dga_new(f, &d));
  return Dga(d);
}

Augs make_augs(const lg_dga* d, int jobs) {
  lg_augs* a = nullptr;
  check(lg_augs_new(d, jobs, &a));
  return Augs(a);
}

std::string aug_bits(const lg_augs* a, std::size_t i) {
  char* s = nullptr;
  check(lg_augs_get(a, i, &s));
  return take(s);
}

// Class representatives are the least members, so the first index of each
// class found in order is its representative.
std::vector<std::string> representatives(const lg_augs* a) {
  std::vector<std::string> reps(lg_augs_class_count(a));
  for (std::size_t i = 0; i < lg_augs_count(a); ++i) {
    int c = 0;
    check(lg_augs_class_of(a, i, &c));
    if (reps[c].empty()) reps[c] = aug_bits(a, i);
  }
  return reps;
}

struct Options {
  std::string file;
  std::string journal;
  bool json = false;
  int jobs = 1;
};

struct Output {
  Json json;
  std::string text;
  bool pass = true;
};

Output cmd_dga(const Options& o) {
  const std::string input = read_file(o.file);
  Front f = parse(input);
  Dga d = make_dga(f.get());
  Output out;
  out.json["input"] = serialize(f.get());
  std::string t = "front: " + serialize(f.get()) + "\n";
  const std::size_t n = lg_dga_generator_count(d.get());
  t += "generators: " + std::to_string(n) + "\n";
  Json gens = Json::array();
  std::string diff;
  for (int id = 1; id <= static_cast<int>(n); ++id) {
    lg_generator g;
    check(lg_dga_generator(d.get(), id, &g));
    char* s = nullptr;
    check(lg_dga_differential(d.get(), id, &s));
    const std::string dq = take(s);
    const char* kind = g.kind == LG_GEN_CROSSING ? "crossing" : "right-cusp";
    gens.push_back({{"id", g.id},
                    {"kind", kind},
                    {"pos", g.pos},
                    {"event", g.event + 1},
                    {"grading", g.grading},
                    {"d", dq}});
    t += "  q" + std::to_string(id) + "  " + kind + " at " +
         std::to_string(g.pos) + ", event " + std::to_string(g.event + 1) +
         ", grading " + std::to_string(g.grading) + "\n";
    diff += "  d q" + std::to_string(id) + " = " + dq + "\n";
  }
  int ok = 0;
  check(lg_dga_check_d_squared(d.get(), &ok));
  out.pass = ok != 0;
  out.json["generators"] = gens;
  out.json["d_squared_zero"] = out.pass;
  out.text = t + "differential:\n" + diff + "d^2 = 0: " +
             (out.pass ? "PASS" : "FAIL") + "\n";
  return out;
}

Output cmd_invariants(const Options& o) {
  Front f = parse(read_file(o.file));
  Dga d = make_dga(f.get());
  Augs a = make_augs(d.get(), o.jobs);
  lg_rulings* rp = nullptr;
  check(lg_rulings_new(f.get(), &rp));
  Rulings r(rp);
  long long total = 0;
  const lg_status counted = lg_rulings_total(r.get(), &total);
  if (counted != LG_OK && counted != LG_ERR_NOT_TWO_BRIDGE) check(counted);
  const bool nu_defined = counted == LG_OK;

  Output out;
  const std::size_t augs = lg_augs_count(a.get());
  const std::size_t classes = lg_augs_class_count(a.get());
  const std::size_t rulings = lg_rulings_count(r.get());
  out.json["input"] = serialize(f.get());
  out.json["augmentations"] = augs;
  out.json["classes"] = classes;
  std::string t = "front: " + serialize(f.get()) + "\n";
  t += "augmentations: " + std::to_string(augs) + "\n";
  t += "classes: " + std::to_string(classes) + "\n";
  t += "rulings: " + std::to_string(rulings) + "\n";
  Json list = Json::array();
  for (std::size_t i = 0; i < rulings; ++i) {
    char* s = nullptr;
    check(lg_rulings_switches(r.get(), i, &s));
    const std::string sw = take(s);
    int nu = -1;
    check(lg_rulings_nu(r.get(), i, &nu));
    Json item = {{"switches", sw}};
    t += "  switches {" + sw + "}";
    if (nu_defined) {
      item["nu"] = nu;
      t += "  nu " + std::to_string(nu);
    }
    list.push_back(item);
    t += "\n";
  }
  out.json["rulings"] = list;
  if (nu_defined) {
    out.pass = total == static_cast<long long>(classes);
    out.json["sum_2_nu"] = total;
    out.json["check"] = out.pass ? "PASS" : "FAIL";
    t += "sum of 2^nu: " + std::to_string(total) + "\n";
    t += std::string("classes = sum of 2^nu: ") + (out.pass ? "PASS" : "FAIL") +
         "\n";
  } else {
    out.json["check"] = "skipped";
    t += "more than two left cusps: sum of 2^nu check skipped\n";
  }
  out.text = t;
  return out;
}

McsPtr make_mcs(const lg_front* f) {
  lg_mcs* m = nullptr;
  check(lg_mcs_new(f, &m));
  return McsPtr(m);
}

Output cmd_mcs(const std::string& sub, const Options& o) {
  Front f = parse(read_file(o.file));
  Output out;
  out.json["input"] = serialize(f.get());
  out.json["subcommand"] = sub;
  if (sub == "validate") {
    lg_mcs* m = nullptr;
    const lg_status s = lg_mcs_new(f.get(), &m);
    McsPtr mcs(m);
    if (s != LG_OK && s != LG_ERR_MCS_INVALID) check(s);
    out.pass = s == LG_OK;
    out.json["valid"] = out.pass;
    if (out.pass) {
      int ok = 0;
      check(lg_mcs_check_dipped(mcs.get(), &ok));
      out.json["dipped_oracle"] = ok != 0;
      out.pass = ok != 0;
      out.text = std::string("PASS\ndipped oracle: ") + (ok ? "PASS" : "FAIL") + "\n";
    } else {
      out.json["reason"] = lg_last_error();
      out.text = std::string("FAIL: ") + lg_last_error() + "\n";
    }
    return out;
  }
  McsPtr mcs = make_mcs(f.get());
  if (sub == "srbar" || sub == "aform" || sub == "srg") {
    const lg_normal_form form = sub == "srbar" ? LG_FORM_SR_BAR
                                : sub == "aform" ? LG_FORM_A
                                                 : LG_FORM_SRG;
    lg_mcs* m = nullptr;
    char* j = nullptr;
    check(lg_mcs_normal_form(mcs.get(), form, &m, &j));
    McsPtr result(m);
    const std::string journal = take(j);
    const std::string front = serialize(result.get());
    out.json["result"] = front;
    out.json["journal"] = journal;
    out.text = "result: " + front + "\njournal:\n" + journal;
    return out;
  }
  if (sub == "replay") {
    if (o.journal.empty())
      throw Failure{LG_ERR_ARGUMENT, "replay needs --journal FILE"};
    lg_mcs* m = nullptr;
    check(lg_mcs_replay(mcs.get(), read_file(o.journal).c_str(), &m));
    McsPtr result(m);
    const std::string front = serialize(result.get());
    out.json["result"] = front;
    out.text = "result: " + front + "\n";
    return out;
  }
  // psi
  Front plain = underlying(f.get());
  Dga d = make_dga(plain.get());
  Augs a = make_augs(d.get(), o.jobs);
  char* bits = nullptr;
  int c = -1;
  check(lg_mcs_psi(mcs.get(), a.get(), &bits, &c));
  const std::string aug = take(bits);
  const std::string rep = representatives(a.get())[c];
  out.json["augmentation"] = aug;
  out.json["class"] = c;
  out.json["representative"] = rep;
  out.json["classes"] = lg_augs_class_count(a.get());
  out.text = "augmentation: " + aug + "\nclass: " + std::to_string(c) + " of " +
             std::to_string(lg_augs_class_count(a.get())) +
             "\nrepresentative: " + rep + "\n";
  return out;
}

void emit(const std::string& command, const Output& out, bool json) {
  if (json) {
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = command;
    doc["pass"] = out.pass;
    for (auto it = out.json.begin(); it != out.json.end(); ++it)
      doc[it.key()] = it.value();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << out.text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian front invariants and Morse complex sequences"};
  app.require_subcommand(1);
  Options o;
  auto common = [&o](CLI::App* cmd) {
    cmd->add_option("FILE", o.file, "front-word file")->required();
    cmd->add_flag("--json", o.json, "emit JSON (schema 1)");
    cmd->add_option("--jobs", o.jobs, "threads for homotopy tests")
        ->check(CLI::Range(1, 256));
  };
  CLI::App* dga = app.add_subcommand("dga", "generators, gradings and the differential");
  common(dga);
  CLI::App* inv = app.add_subcommand("invariants", "augmentations, classes and rulings");
  common(inv);
  CLI::App* mcs = app.add_subcommand("mcs", "Morse complex sequences on a marked front");
  mcs->require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> subs = {
      {"validate", "check the marked front is an MCS"},
      {"srbar", "an equivalent MCS in S R-bar form, with its move journal"},
      {"aform", "an equivalent MCS in A-form, with its move journal"},
      {"srg", "the S R-bar_g form (2-bridge fronts)"},
      {"psi", "the augmentation class of the MCS"},
      {"replay", "apply a move journal"}};
  for (const auto& [name, help] : subs) {
    CLI::App* s = mcs->add_subcommand(name, help);
    common(s);
    if (name == "replay")
      s->add_option("--journal", o.journal, "journal file")->required();
  }
  CLI11_PARSE(app, argc, argv);

  std::string command;
  try {
    Output out;
    if (dga->parsed()) {
      command = "dga";
      out = cmd_dga(o);
    } else if (inv->parsed()) {
      command = "invariants";
      out = cmd_invariants(o);
    } else {
      const std::string sub = mcs->get_subcommands().front()->get_name();
      command = "mcs " + sub;
      out = cmd_mcs(sub, o);
    }
    emit(command, out, o.json);
    return out.pass ? 0 : 1;
  } catch (const Failure& f) {
    if (o.json) {
      Json doc;
      doc["schema"] = kSchema;
      doc["command"] = command;
      doc["pass"] = false;
      doc["error"] = {{"code", lg_status_name(f.status)}, {"message", f.message}};
      std::cout << doc.dump(2) << "\n";
    }
    std::cerr << "error (" << lg_status_name(f.status) << "): " << f.message
              << "\n";
    return 2;
  }
}
