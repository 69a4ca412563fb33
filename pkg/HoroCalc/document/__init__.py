from ._parse import Problem, ParsedDocument, parse, parse_document
from ._render import document_dict, render_document, render_json
