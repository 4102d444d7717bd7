// Copyright 2026 The wcore Authors
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

#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace wcore::cli;

  CLI::App app{"wcore: exact generalized inverses, matrix partial orders and property suites"};
  app.require_subcommand(1);
  bool no_timestamp = false;
  int indent = 2;
  app.add_flag("--no-timestamp", no_timestamp, "Omit the timestamp field");
  app.add_option("--indent", indent, "JSON indentation (-1 for compact)");

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute a generalized inverse");
  c->add_option("--kind", compute.kind, "inner|reflexive|group|one3|one4|mp|along|core|wcore")->required();
  c->add_option("--a", compute.a, "MatrixDocument file or inline JSON")->required();
  c->add_option("--aux,--w,--d", compute.aux, "w for wcore, d for along");
  c->add_option("--domain", compute.domain, "Domain for documents that omit one");
  c->add_option("--pivot", compute.pivot, "first|last pivot strategy for inner inverses");

  OrderArgs order;
  auto* o = app.add_subcommand("order", "Decide a partial order");
  o->add_option("--kind", order.kind, "minus|plus|sharp|star|leftstar|rightsharp|diamond|core|wcore")->required();
  o->add_option("--a", order.a)->required();
  o->add_option("--b", order.b)->required();
  o->add_option("--w", order.w);
  o->add_option("--mode", order.mode, "strict|relaxed");
  o->add_option("--domain", order.domain);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run property suites");
  v->add_option("--id", verify.ids, "Property id (repeatable)");
  v->add_flag("--all", verify.all, "Every property");
  v->add_option("--domain", verify.domain);
  v->add_option("--dim", verify.dim);
  v->add_option("--trials", verify.trials);
  v->add_option("--seed", verify.seed);
  v->add_flag("--exhaustive", verify.exhaustive, "Enumerate every instance (mod_p only)");
  v->add_option("--min-applicable", verify.min_applicable, "Applicable instances required per property");

  auto* e = app.add_subcommand("examples", "Replay the reference examples");

  EnumerateArgs enumerate;
  auto* n = app.add_subcommand("enumerate", "Enumerate M_n(Z_p) or brute-force an inverse");
  n->add_option("--domain", enumerate.domain)->required();
  n->add_option("--dim", enumerate.dim);
  n->add_option("--kind", enumerate.kind);
  n->add_option("--a", enumerate.a);
  n->add_option("--aux,--w,--d", enumerate.aux);
  n->add_flag("--list", enumerate.list, "Include every matrix in the payload");

  CLI11_PARSE(app, argc, argv);

  CommandResult result;
  if (c->parsed()) {
    result = cmd_compute(compute);
  } else if (o->parsed()) {
    result = cmd_order(order);
  } else if (v->parsed()) {
    result = cmd_verify(verify);
  } else if (e->parsed()) {
    result = cmd_examples();
  } else {
    result = cmd_enumerate(enumerate);
  }
  if (!no_timestamp) result.timestamp = utc_timestamp();
  std::cout << result.to_json().dump(indent) << '\n';
  return result.exit_code();
}
