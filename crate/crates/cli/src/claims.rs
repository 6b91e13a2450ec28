//! Claims checked by this workspace, and where each one is tested.

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub tests: &'static [&'static str],
}

pub const CLAIMS: &[Claim] = &[
    Claim {
        id: "q-counting",
        statement: "Gaussian binomials count subspaces; multiplicities sum to the Galois number",
        tests: &["qarith::q_binomial_matches_brute_force_count", "qarith::goldman_rota", "selftest q-counting"],
    },
    Claim {
        id: "row-sums",
        statement: "every row of M_q(n) sums to (n)_q",
        tests: &["operators::mq_row_sums", "selftest row-sums"],
    },
    Claim {
        id: "detailed-balance",
        statement: "M_q(n) is reversible for pi(X) = q^C(k,2) / P_q(n)",
        tests: &["operators::mq_detailed_balance", "selftest detailed-balance"],
    },
    Claim {
        id: "self-adjoint",
        statement: "A is self-adjoint for the pi inner product",
        tests: &["operators::self_adjoint_random", "selftest self-adjoint"],
    },
    Claim {
        id: "spectrum",
        statement: "eigenvalues (n-k)_q - (k)_q with multiplicity [n,k]_q",
        tests: &["spectra::charpoly_against_determinant_oracle", "acceptance criterion 1", "selftest spectrum"],
    },
    Claim {
        id: "q-kac",
        statement: "terminating hypergeometric vectors are eigenvectors of K_q(n)",
        tests: &["spectra::kq_residuals_vanish", "acceptance criterion 2", "selftest q-kac"],
    },
    Claim {
        id: "blocked-spectrum",
        statement: "scaled K_q blocks reassemble the full spectrum",
        tests: &["spectra::blocked_assembly", "selftest blocked-spectrum"],
    },
    Claim {
        id: "eigenbasis",
        statement: "the recursion yields G_q(n) exact eigenvectors matching the spectrum",
        tests: &["eigenbasis::small_basis_eigenvalues", "acceptance criterion 3", "selftest eigenbasis"],
    },
    Claim {
        id: "orthogonality",
        statement: "distinct basis vectors are pi-orthogonal",
        tests: &["eigenbasis::laws::laws_on_small_bases", "acceptance criterion 3", "selftest orthogonality"],
    },
    Claim {
        id: "norms",
        statement: "squared norms follow the three lifting recursions",
        tests: &["eigenbasis::laws::norm_examples", "acceptance criterion 4", "selftest norms"],
    },
    Claim {
        id: "coordinates",
        statement: "coordinates of lifted vectors follow the lifting laws",
        tests: &["eigenbasis::laws::laws_on_small_bases", "acceptance criterion 4", "selftest coordinates"],
    },
    Claim {
        id: "conjugate-flip",
        statement: "conjugating the index conjugates the vector",
        tests: &["eigenbasis::laws::laws_on_small_bases", "acceptance criterion 4", "selftest conjugate-flip"],
    },
    Claim {
        id: "closed-form",
        statement: "classical indices have explicit alternating-sum eigenvectors",
        tests: &["eigenbasis::classical::closed_form_matches_recursion", "acceptance criterion 5", "selftest closed-form"],
    },
    Claim {
        id: "radial",
        statement: "radial vectors lie in the span of the closed-form eigenvectors",
        tests: &["eigenbasis::classical::radial_vectors_in_span", "acceptance criterion 6", "selftest radial"],
    },
    Claim {
        id: "structural",
        statement: "theta, lift, A' and projection-dimension identities",
        tests: &["eigenbasis::laws::theta_identities", "acceptance criterion 8", "selftest structural"],
    },
    Claim {
        id: "trees-minors",
        statement: "the tree product formula equals the sum of principal minors of L",
        tests: &["trees::three_routes_agree", "acceptance criterion 7", "selftest trees-minors"],
    },
    Claim {
        id: "trees-enumeration",
        statement: "the tree product formula equals direct spanning tree enumeration",
        tests: &["trees::spanning_tree_count_small", "acceptance criterion 7", "selftest trees-enumeration"],
    },
    Claim {
        id: "trees-hypercube",
        statement: "at q = 1 the tree formula is the n-cube spanning tree count",
        tests: &["trees::hypercube_specialization", "trees::q1_report_compares_hypercube", "selftest trees-hypercube"],
    },
];

pub fn render() -> String {
    let width = CLAIMS.iter().map(|c| c.id.len()).max().unwrap_or(0);
    let mut s = String::new();
    for c in CLAIMS {
        s.push_str(&format!("{:width$}  {}\n", c.id, c.statement));
        for t in c.tests {
            s.push_str(&format!("{:width$}    - {t}\n", ""));
        }
    }
    s
}
