#pragma once

#include "sfknot/diagram.hpp"

#include <array>
#include <string>
#include <vector>

namespace sfknot {

// Dowker-Thistlethwaite code: the even label paired with odd labels 1, 3, 5, ...
// A negative label means the strand is passed over at its even visit.
struct DtCode {
    std::vector<long long> labels;
    std::string str() const;
};

enum class Passage { Over, Under };

struct GaussEntry {
    long long id = 0;
    Passage passage = Passage::Over;
    int sign = 1;
};

struct GaussCode {
    std::vector<GaussEntry> entries;
    std::string str() const;
};

// Crossings as X[a,b,c,d], read counterclockwise from the incoming under-strand.
struct PdNotation {
    std::vector<std::array<long long, 4>> crossings;
    std::string str() const;
};

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;
    std::string str() const;
};

DtCode parse_dt(const std::string& text);
GaussCode parse_gauss(const std::string& text);
PdNotation parse_pd(const std::string& text);
BraidWord parse_braid(const std::string& text);

PlanarDiagram realize_dt(const DtCode& code);
PlanarDiagram realize_gauss(const GaussCode& code);
PlanarDiagram realize_pd(const PdNotation& code);
PlanarDiagram realize_braid(const BraidWord& word);

// Reads the presentation back off a diagram.
DtCode to_dt(const PlanarDiagram& d);
GaussCode to_gauss(const PlanarDiagram& d);
PdNotation to_pd(const PlanarDiagram& d);  // labels 1..2n

enum class Format { Dt, Gauss, Pd, Braid };
PlanarDiagram to_diagram(Format f, const std::string& text);

// Planarity test for a Gauss sequence with a chosen rotation at every crossing.
// seq lists crossing ids (0..n-1) by visit, over[k] tells whether visit k passes over,
// turn[x] = +1 when the second visit of x crosses the first from right to left.
// Returns the crossing data in diagram form or throws Unrealizable.
PlanarDiagram embed_gauss_sequence(const std::vector<int>& seq, const std::vector<char>& over,
                                   const std::vector<int>& turn);

}  // namespace sfknot
