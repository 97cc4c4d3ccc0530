// Copyright 2026 The hardysim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HARDYSIM_GATES_H_
#define HARDYSIM_GATES_H_

#include "hardysim/statevector.h"

/// Named unitaries for the interferometric Hardy circuit and their
/// hardware-native forms. All angles are radians.
namespace hardysim::gates {

/// diag(1, e^{i lambda}).
UnitaryMatrix u1(double lambda);

/// Hardware U3 convention:
///   [[cos(t/2),          -e^{i lambda} sin(t/2)],
///    [e^{i phi} sin(t/2), e^{i(phi+lambda)} cos(t/2)]]
/// u3(2*theta, 0, 0) == beam_splitter(theta).
UnitaryMatrix u3(double theta, double phi, double lambda);

/// Real rotation [[cos t, -sin t], [sin t, cos t]].
UnitaryMatrix beam_splitter(double theta);

/// diag(1, e^{i phi}); identical to u1(phi).
UnitaryMatrix phase_shifter(double phi);

/// diag(1, 1, 1, e^{2 i phi}).
UnitaryMatrix coupling(double phi);

/// Two-qubit CNOT-based form of coupling(phi) on qubits {1 (Alice), 0 (Bob)}:
///   M1 = Id ⊗ U1(-lambda), CNOT, M2 = U1(lambda) ⊗ U1(-lambda), CNOT, M3 = Id ⊗ U1(2 lambda)
/// with lambda bound to phi. Single-qubit factors are emitted as separate
/// steps, so the circuit has 6 gate applications.
Circuit coupling_decomposed(double phi);

/// Same sequence with an explicit lambda. Only lambda == phi reproduces
/// coupling(phi); other values exist for negative-control testing.
Circuit coupling_decomposed(double phi, double lambda);

/// CNOT on a two-qubit register; control and target are 0 or 1.
UnitaryMatrix cnot(int control, int target);
UnitaryMatrix hadamard();
UnitaryMatrix pauli_x();
UnitaryMatrix pauli_y();
UnitaryMatrix pauli_z();
UnitaryMatrix identity();

}  // namespace hardysim::gates

#endif  // HARDYSIM_GATES_H_
