from corrkit.io.generators import (
    GenConfig,
    gen_cat_diagram,
    gen_category,
    gen_correspondence,
    gen_functor,
    gen_map_over,
    gen_profunctor,
    gen_sset,
)
from corrkit.io.serialize import canonical_json, content_id, dumps, from_json, parse, parse_ref, serialize, to_json
from corrkit.io.workspace import Workspace, load_dir, load_doc, load_file, require_valid, validate_value
