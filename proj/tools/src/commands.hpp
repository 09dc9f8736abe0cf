#pragma once

#include "satake/cli_json.hpp"
#include "satake/root_datum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace satake::cli {

struct Options {
  std::string group = "PGL2";
  std::string datum_file;
  bool table = false;
  std::string mu, lambda, nu, sign = "plus", word, x, y, parabolic, q_list = "2,3";
  Int q = 2;
  int seed = 0;
  Int twist = 0;
  Int max_height = 6;
  std::size_t limit = 100;
  bool contributing_only = false;
  bool oracle = false;
  bool has_nu = false;
  bool has_q = false;
};

RootDatum load_datum(const Options& o);
/// "1,2,1" with 1-based simple reflection indices; "" or "e" is the empty word.
std::vector<int> parse_word(const std::string& s);
GenMask parse_mask(const std::string& s);

Json cmd_rootdata(const Options& o);
Json cmd_galleries(const Options& o);
Json cmd_mv_cells(const Options& o);
Json cmd_deodhar(const Options& o);
Json cmd_hecke_mul(const Options& o);
Json cmd_hecke_basis(const Options& o);
Json cmd_satake_diagram(const Options& o);
Json cmd_satake_transform(const Options& o);
Json cmd_vinberg_check(const Options& o);
Json cmd_vinberg_psi(const Options& o);
Json cmd_oracle_conv(const Options& o);
Json cmd_oracle_schubert(const Options& o);
Json cmd_oracle_semiinfinite(const Options& o);
Json cmd_oracle_flag(const Options& o);
/// Sets `ok` in the returned object.
Json cmd_report_pgl2(const Options& o);

void print_table(const Json& j, std::ostream& out);

}  // namespace satake::cli
