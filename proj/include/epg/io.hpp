#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "epg/epg.hpp"
#include "epg/pca_types.hpp"

namespace epg {

// Text formats (UTF-8, LF, '#' starts a comment, blank lines ignored):
//
//   EPG file:      header "epg <n> <m>", then m lines "u v <bitstring>".
//   graph file:    header "graph <n> <m>", then m lines "u v".
//   PCA file:      one bitstring per line; a line "%" separates groups
//                  (multicolored instances have >= 2 groups).
//
// Bitstrings may abbreviate repetitions: 10^4 = 10000, 10^{12} = 1 followed
// by twelve 0s (unbraced counts are one digit). Abbreviations are expanded on
// parse and never written back.

EdgePeriodicGraph parse_epg(std::istream& in);
EdgePeriodicGraph parse_epg_text(const std::string& text);
EdgePeriodicGraph load_epg(const std::string& path);
std::string print_epg(const EdgePeriodicGraph& g);

StaticGraph parse_graph(std::istream& in);
StaticGraph parse_graph_text(const std::string& text);
StaticGraph load_graph(const std::string& path);
std::string print_graph(const StaticGraph& g);

PcaInstance parse_pca_text(const std::string& text);
PcaInstance load_pca(const std::string& path);
std::string print_pca(const PcaInstance& x);

MulticoloredPcaInstance parse_mcpca_text(const std::string& text);
MulticoloredPcaInstance load_mcpca(const std::string& path);
std::string print_mcpca(const MulticoloredPcaInstance& x);

std::string expand_bitstring(const std::string& token, std::size_t line_number);

void write_file_atomic(const std::string& path, const std::string& content);

// FNV-1a hash of a serialized payload, as fixed-width hex.
std::string digest(const std::string& payload);

} // namespace epg
