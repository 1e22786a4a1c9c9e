#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "nlat/degtyarev.hpp"

namespace nlat {

namespace {

using json = nlohmann::ordered_json;

json int_vec(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(x.str());
  return a;
}

json rat_vec(const std::vector<Rat>& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(x.str());
  return a;
}

json int_mat(const IntMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json rat_mat(const RatMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json lattice_obj(const Lattice& l) {
  json o;
  o["label"] = l.label;
  o["invariants"] = to_string(invariants(l));
  o["gram"] = int_mat(l.gram);
  return o;
}

json entry_obj(const CheckEntry& e) {
  json o;
  o["name"] = e.name;
  o["pass"] = e.pass;
  o["detail"] = e.detail;
  return o;
}

json entry_list(const std::vector<CheckEntry>& entries) {
  json a = json::array();
  for (const CheckEntry& e : entries) a.push_back(entry_obj(e));
  return a;
}

void print_entries(std::ostream& out, const std::vector<CheckEntry>& entries) {
  for (const CheckEntry& e : entries) {
    out << "  [" << (e.pass ? "ok" : "FAIL") << "] " << e.name;
    if (!e.detail.empty()) out << "  (" << e.detail << ")";
    out << "\n";
  }
}

}  // namespace

std::string certificate_json(const EigenlatticeCertificate& c,
                             const CertificateReport& r) {
  json o;
  o["base"] = lattice_obj(c.base);
  o["plus_range"] = json::array({c.plus_range.begin, c.plus_range.end});
  o["minus_range"] = json::array({c.minus_range.begin, c.minus_range.end});
  o["step1"] = lattice_obj(c.step1);
  o["step1_index"] = c.step1_index.str();
  o["l_minus1"] = lattice_obj(c.l_minus1);
  o["index"] = c.index.str();
  o["basis"] = rat_mat(c.basis);
  o["a_plus"] = int_vec(c.a_plus);
  o["a_minus"] = int_vec(c.a_minus);
  o["r_plus"] = rat_vec(c.r_plus);
  o["r_minus"] = rat_vec(c.r_minus);
  o["r_plus_L"] = int_vec(c.r_plus_L);
  o["r_minus_L"] = int_vec(c.r_minus_L);
  o["c1_action"] = int_mat(c.c1_action.matrix);
  o["tau_action"] = int_mat(c.tau_action.matrix);
  o["tau_sign"] = r.tau_sign;
  o["identities"] = entry_list(r.identities);
  o["extras"] = entry_list(r.extras);
  o["notes"] = r.notes;
  o["all_pass"] = r.all_pass();
  return o.dump(2) + "\n";
}

std::string certificate_text(const EigenlatticeCertificate& c,
                             const CertificateReport& r) {
  std::ostringstream out;
  out << "eigenlattice certificate\n";
  out << "  base:   " << c.base.label << "  [" << to_string(invariants(c.base))
      << "]\n";
  out << "  step 1: index " << c.step1_index.str() << "  ["
      << to_string(invariants(c.step1)) << "]\n";
  out << "  final:  " << c.l_minus1.label << ", index " << c.index.str()
      << "  [" << to_string(invariants(c.l_minus1)) << "]\n";
  out << "identities:\n";
  print_entries(out, r.identities);
  out << "supporting checks:\n";
  print_entries(out, r.extras);
  for (const std::string& n : r.notes) out << "note: " << n << "\n";
  out << "tau sign: " << r.tau_sign << "\n";
  out << (r.all_pass() ? "all identities pass" : "CERTIFICATE FAILED") << "\n";
  return out.str();
}

}  // namespace nlat
