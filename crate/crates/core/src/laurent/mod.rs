mod matrix;
mod poly;
mod reps;

pub use matrix::LaurentMatrix;
pub use poly::{LaurentPoly, Var, Vars};
pub use reps::{
    bigelow_words, bigelow_words_with, braid_matrix, kernel_check, kernel_check_with, matrix_of_letter,
    theta_conjugate, CommutatorConvention, KernelReport, LinearRep,
};
