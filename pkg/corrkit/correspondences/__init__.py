from corrkit.correspondences.correspondence import (
    Correspondence,
    constant,
    corr_degeneracy,
    corr_face,
    cotabulator_hom_check,
    degeneracy_deletion_check,
    degeneracy_pasting_check,
    derive,
    face_deletion_check,
    face_pasting_check,
    fiber,
    iterated_degeneracy,
    vertical_mapping_space,
    weak_simplicial_identities_check,
)
from corrkit.correspondences.diagram import (
    CorrDiagram,
    DoubleColimit,
    RoundtripResult,
    VerticalTransformationS,
    classifying_diagram,
    cotabulator,
    double_colimit,
    roundtrip_check,
    truncation_stable,
)
