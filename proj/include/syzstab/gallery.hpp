#pragma once

#include <functional>
#include <string>
#include <vector>

#include "syzstab/ideals.hpp"

namespace syzstab {

/// x_i = t^i, x_{k+1+i} = s t^i + i t^{i-1} e in 2k+2 variables.
Parameterization carpet(int k);
/// Hyperplane section of carpet(k) in 2k+1 variables.
Parameterization ribbon(int k);
/// 2x2 minors of the scroll matrix with blocks of widths a and 4-a.
IdealPresentation scroll(int a);
IdealPresentation veronese();
/// Pfaffian quadrics of the singular quintic del Pezzo.
IdealPresentation del_pezzo_singular();
PolyMatrix del_pezzo_singular_matrix();
/// The same surface via cubics a=xy(x-y), b=zx^2, zxy, zy^2, c=z^2x, z^2y.
Parameterization del_pezzo_singular_param();
/// Smooth quintic del Pezzo: cubics through [1:0:0], [0:1:0], [0:0:1], [1:1:1].
Parameterization del_pezzo_smooth();
/// (x0^2) + the quadrics of the singular del Pezzo.
IdealPresentation c_zero();

/// Quadrics of s plus one more quadric.
IdealPresentation quadric_section(const Scheme& s, const Polynomial& q);
/// The stored generic quadric used for sigma0-section.
Polynomial generic_quadric();

/// Cone over the elliptic quintic cut out by the Pfaffians of a 5x5
/// antisymmetric matrix of linear forms in x1..x5 (r = 6, x0 is the vertex
/// direction). The base curve must have Hilbert function 5q for q <= 4.
IdealPresentation elliptic_cone(const PolyMatrix& m);
PolyMatrix default_elliptic_matrix();

struct CheckResult {
  std::string item;
  std::string check;
  std::string expected;
  std::string actual;
  std::string source;
  bool pass = false;
};

struct ExpectedCheck {
  std::string check;
  std::string expected;
  std::string source;
  std::function<std::string(const Scheme&)> compute;
};

struct GalleryItem {
  std::string name;
  std::string description;
  Scheme scheme;
  std::vector<ExpectedCheck> expected;
};

std::vector<std::string> gallery_names();
bool is_reserved_name(const std::string& name);
/// Accepts the listed names plus carpet-<k> and ribbon-<k> for any k >= 1.
GalleryItem gallery_item(const std::string& name);
std::vector<CheckResult> run_checks(const GalleryItem& item);
/// Ideal file text with minimal generators up to degree 4.
std::string export_item(const GalleryItem& item, int max_degree = 4);

}  // namespace syzstab
