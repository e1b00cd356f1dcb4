#pragma once

#include "sfknot/census.hpp"
#include "sfknot/hfk.hpp"
#include "sfknot/invariants.hpp"
#include "sfknot/obstructions.hpp"
#include "sfknot/plumbing.hpp"

#include <string>

namespace sfknot {

// Human readable blocks.
std::string format_invariants(const KnotInvariants& inv);
std::string format_report(const ObstructionReport& r);
std::string format_brieskorn(const std::string& name, const BrieskornFilter& f);
std::string format_form(const FormClass& fc, Orientation o);
std::string format_scan(const ScanSummary& s);

// Machine readable records: one JSON object per line.
std::string records_invariants(const KnotInvariants& inv);
std::string records_report(const ObstructionReport& r);
std::string records_brieskorn(const std::string& name, const BrieskornFilter& f);
std::string records_hfk(const std::string& name, const HfkTable& h);
std::string records_form(const FormClass& fc, Orientation o);
std::string records_scan(const ScanSummary& s);

}  // namespace sfknot
