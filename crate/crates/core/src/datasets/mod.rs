//! Dataset ingestion, standardization, synthetic generators and label perturbations.

mod generators;
mod perturb;
mod standardize;
mod table;

pub use generators::{
    gen_chain_ramp, gen_rings_with_noise, gen_two_moons, gen_uniform_balls, generate, BallsSpec,
    ChainSpec, GeneratorSpec, MoonsSpec, RingsSpec,
};
pub use perturb::{perturb_labels, Amount, PerturbOp};
pub use standardize::{z_standardize, Standardization, ZeroVarianceWarning};
pub use table::{load_csv, load_labels, read_table, save_csv, write_csv, LabelColumn, RawTable};
