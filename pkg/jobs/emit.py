"""Serialize ResultDocuments as JSON, CSV or plain text.

All three are deterministic: JSON sorts keys, CSV writes one section per
table in sorted order with sorted columns, and text renders the same
sections through a template. Exact numbers are already strings in the
document, so no float ever reaches the output.
"""
import csv
import io
import json

from django.template.loader import render_to_string


FORMATS = ('json', 'csv', 'text')


def _plain(doc, include_timing):
    if hasattr(doc, 'to_data'):
        return doc.to_data(include_timing=include_timing)
    return doc


def _cell(value):
    if isinstance(value, str):
        return value
    return json.dumps(value, sort_keys=True, separators=(',', ':'))


def _sections(data):
    """(name, header, rows) triples for the job echo, each table and the
    error record."""
    if not isinstance(data, dict) or 'tables' not in data:
        return [_section('data', data)]
    sections = [_section('job', data['job'])]
    for name in sorted(data['tables']):
        sections.append(_section(name, data['tables'][name]))
    if data.get('error') is not None:
        sections.append(_section('error', data['error']))
    if 'timing' in data:
        sections.append(_section('timing', data['timing']))
    return sections


def _section(name, value):
    if isinstance(value, list) and all(isinstance(v, dict) for v in value):
        header = sorted(set(k for row in value for k in row))
        rows = [[_cell(row.get(k)) for k in header] for row in value]
        return name, header, rows
    if isinstance(value, dict):
        return name, ['key', 'value'], [[k, _cell(value[k])]
                                        for k in sorted(value)]
    return name, ['value'], [[_cell(value)]]


def emit_json(data):
    return json.dumps(data, sort_keys=True, indent=2) + '\n'


def emit_csv(data):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    for index, (name, header, rows) in enumerate(_sections(data)):
        if index:
            out.write('\n')
        out.write('# %s\n' % name)
        writer.writerow(header)
        writer.writerows(rows)
    return out.getvalue()


def emit_text(data):
    sections = []
    for name, header, rows in _sections(data):
        if header == ['key', 'value']:
            lines = ['%s: %s' % (k, v) for k, v in rows]
        elif header == ['value']:
            lines = [row[0] for row in rows]
        else:
            lines = ['  '.join('%s=%s' % (h, c) for h, c in zip(header, row))
                     for row in rows]
        sections.append({'name': name, 'lines': lines})
    context = {'sections': sections}
    if isinstance(data, dict):
        context.update(job=data.get('job'), error=data.get('error'),
                       engine_version=data.get('engine_version'))
    return render_to_string('jobs/result.txt', context)


EMITTERS = {
    'json': emit_json,
    'csv': emit_csv,
    'text': emit_text,
}


def emit(doc, fmt='json', include_timing=False):
    """Serialize a ResultDocument (or plain data such as a catalog) as UTF-8
    bytes."""
    if fmt not in EMITTERS:
        raise ValueError('unknown format %r' % fmt)
    return EMITTERS[fmt](_plain(doc, include_timing)).encode('utf-8')
