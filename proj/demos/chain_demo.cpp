// Demo: decide equivalence of surface pairs and print the resulting
// certificate chains, including the full multi-step route that removes the
// multiple fibers of a Dolgachev-type elliptic surface.

#include <iostream>
#include <string>

#include "qed/chains.hpp"

namespace {

void show(const std::string& title, const qed::SurfaceDescriptor& a,
          const qed::SurfaceDescriptor& b) {
  std::cout << "=== " << title << " ===\n";
  std::cout << "from: " << qed::serialize_descriptor(a) << "\n";
  std::cout << "to:   " << qed::serialize_descriptor(b) << "\n";
  qed::EquivalenceResult r = qed::decide_equivalence(a, b);
  std::cout << "outcome: " << qed::equivalence_outcome_name(r.outcome);
  if (r.outcome != qed::EquivalenceResult::Outcome::Equivalent) {
    std::cout << " (" << r.reason << ")\n\n";
    return;
  }
  std::cout << " in " << r.certificate.steps.size() << " steps\n";
  qed::VerifyReport rep = qed::verify_certificate(r.certificate);
  std::cout << "independent verification: " << (rep.ok ? "ok" : "FAIL") << "\n\n";
  std::cout << qed::serialize_certificate(r.certificate) << "\n";
}

}  // namespace

int main() {
  // Two Kaehler surfaces of kodaira dimension zero: connected through the
  // K3 family and the Kummer construction.
  show("Enriques surface vs K3 surface", qed::enriques_descriptor(), qed::k3_descriptor());

  // A Dolgachev-type elliptic surface with multiple fibers of orders 2 and 3.
  // The chain degenerates to extra D4 fibers, contracts, passes to an
  // orbifold cover that removes the multiple fibers, and lands on a product.
  show("Dolgachev-type surface vs elliptic product",
       qed::elliptic_surface(0, {2, 3}, 1), qed::elliptic_product(4));

  // Kodaira dimension is invariant under every move, so cross-dimension
  // pairs are obstructed.
  show("Enriques surface vs elliptic bundle", qed::enriques_descriptor(),
       qed::elliptic_product(2));

  // Non-Kaehler Kodaira surfaces stay among themselves.
  show("primary Kodaira surface vs torus", qed::kodaira_primary_descriptor(),
       qed::torus_descriptor());
  show("secondary vs primary Kodaira surface", qed::kodaira_secondary_descriptor(),
       qed::kodaira_primary_descriptor());
  return 0;
}
