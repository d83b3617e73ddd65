mod braid;
mod catalogue;

pub use braid::{vbn_relations, BraidLetter, BraidWord, LetterKind, Relation, RelationKind};
pub use catalogue::{
    braid_image, conjugate_representation, get_representation, get_representation_by_name, is_virtually_symmetric,
    standard_conjugator, verify_representation, RelationFailure, RepName, RepresentationSpec, VerifyReport,
    DEFAULT_W1_PARAMETER,
};
