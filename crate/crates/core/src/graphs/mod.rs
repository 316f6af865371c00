//! Graphs carried by real equiangular tight frames: Seidel matrices,
//! strongly regular graphs, Paley graphs, and exact clique numbers.

mod clique;
mod graph;
mod identities;
mod paley;
mod seidel;
mod srg;

pub use clique::{clique_number, CliqueResult};
pub use graph::SimpleGraph;
pub use identities::{
    clique_ric_identity, expander_mixing_check, fro_from_graph, seidel_trace_expansion,
    CliqueRicCheck, MixingCheck, TraceExpansion, CLIQUE_BUDGET, TUPLE_BUDGET,
};
pub use paley::{is_prime, legendre, paley_graph, quadratic_residues};
pub use seidel::{flip_canonical, graph_from_seidel, seidel_from_gram, SeidelMatrix};
pub use srg::{join_decompose, predicted_srg, srg_check, SrgOutcome, SrgParams};
