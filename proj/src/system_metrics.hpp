#pragma once

#include "class_metrics.hpp"
#include "model.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oodq {

struct MOODVector {
  double mhf = 0; // method hiding factor
  double ahf = 0; // attribute hiding factor
  double mif = 0; // method inheritance factor
  double aif = 0; // attribute inheritance factor
  double cf = 0;  // coupling factor
  std::optional<double> pf; // polymorphism factor; absent without inheritance
};

struct QmoodClassMetrics {
  double ana = 0; // ancestors
  double dam = 0; // hidden-attribute ratio
  double dcc = 0; // direct class coupling
  double cam = 0; // cohesion among methods
  double moa = 0; // aggregation
  double mfa = 0; // functional abstraction
  double nop = 0; // polymorphic methods
  double cis = 0; // public methods
  double nom = 0; // all methods
};

struct QmoodDesignProperties {
  double design_size = 0;   // <- DSC
  double hierarchies = 0;   // <- NOH
  double abstraction = 0;   // <- mean ANA
  double encapsulation = 0; // <- mean DAM
  double coupling = 0;      // <- mean DCC
  double cohesion = 0;      // <- mean CAM
  double composition = 0;   // <- mean MOA
  double inheritance = 0;   // <- mean MFA
  double polymorphism = 0;  // <- mean NOP
  double messaging = 0;     // <- mean CIS
  double complexity = 0;    // <- mean NOM

  double value_of(const std::string& property) const;
  void set(const std::string& property, double value);
  static const std::vector<std::string>& property_names();
};

struct QualityIndices {
  double reusability = 0;
  double flexibility = 0;
  double understandability = 0;
  double functionality = 0;
  double extendibility = 0;
  double effectiveness = 0;
  double tqi = 0; // sum of the six
};

// Throws AnalysisError{EmptyProject} when the project has no classes.
MOODVector mood_metrics(const ProjectModel& project, const ReferenceIndex& refs);

QmoodClassMetrics qmood_class_metrics(const ProjectModel& project, int class_index);

// Means of the per-class metrics plus DSC/NOH; optional baseline
// divisors (property name -> divisor). A zero divisor zeroes the
// property and appends a diagnostic.
QmoodDesignProperties qmood_properties(const ProjectModel& project,
                                       const std::vector<QmoodClassMetrics>& per_class,
                                       const std::map<std::string, double>* baseline = nullptr,
                                       std::vector<std::string>* diagnostics = nullptr);

QualityIndices quality_indices(const QmoodDesignProperties& p);

} // namespace oodq
