// Renders the server's token stream into colored spans. Token offsets are
// bytes into the UTF-8 encoding of the content, so slicing goes through
// TextEncoder/TextDecoder rather than string indices.

import type { HighlightToken } from "./types";

const encoder = new TextEncoder();
const decoder = new TextDecoder();

/** Token kind -> CSS class; colors live in CSS variables (12-entry theme). */
export function tokenClass(kind: string): string {
  return `tok-${kind}`;
}

export function renderCode(content: string, tokens: HighlightToken[]): DocumentFragment {
  const bytes = encoder.encode(content);
  const fragment = document.createDocumentFragment();
  for (const token of tokens) {
    const text = decoder.decode(bytes.subarray(token.start, token.start + token.length));
    if (token.kind === "whitespace") {
      fragment.appendChild(document.createTextNode(text));
      continue;
    }
    const span = document.createElement("span");
    span.className = tokenClass(token.kind);
    span.textContent = text;
    fragment.appendChild(span);
  }
  return fragment;
}
