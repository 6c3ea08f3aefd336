from binopy.io.pbm import pbm_bytes, write_pbm, parse_pbm, read_pbm_bits
from binopy.io.svg import svg_document, write_svg, read_svg
from binopy.io.export import write_json, read_json, write_csv, read_csv, pairs_to_dict
