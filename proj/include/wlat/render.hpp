#pragma once

/**
 * Wire formats.  CSV numbers are printed with printf "%.17g" so every double
 * round-trips; JSON documents are built with nlohmann::json (lossless
 * shortest-round-trip doubles) with array entries emitted in lexicographic
 * key order, so identical inputs always produce identical bytes.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "wlat/evolution.hpp"
#include "wlat/propagator.hpp"
#include "wlat/spectral.hpp"

namespace wlat::render {

/** Lossless decimal form of a double ("%.17g"). */
std::string fmt17(double x);

nlohmann::json to_json(const Spinor& s);      // [re0, im0, re1, im1]
nlohmann::json to_json(const SpinMatrix& m);  // [[re,im] x 4], row-major

/** Field snapshot: list of {counts: [4 ints], spinor: [re0, im0, re1, im1]},
 *  ordered lexicographically by counts. */
nlohmann::json to_json(const evolution::SliceField& f);

/** Kernel table: {t, chirality, entries: [{counts, matrix}]}, lex order. */
nlohmann::json to_json(const propagator::KernelTable& k);

/** Spectrum scan CSV with header
 *  theta1,theta2,theta3,theta4,re_lambda,im_lambda,branch_index. */
std::string scan_csv(const std::vector<spectral::ScanRow>& rows);

}  // namespace wlat::render
