const SVG_NS = "http://www.w3.org/2000/svg";

export function createSvgNode<T extends keyof SVGElementTagNameMap>(
  parent: Element | null,
  tag: T,
  attrs: Record<string, string | number> = {},
): SVGElementTagNameMap[T] {
  const element = document.createElementNS(SVG_NS, tag);
  setSvgAttributes(element, attrs);
  parent?.appendChild(element);
  return element;
}

export function setSvgAttributes(
  element: SVGElement,
  attrs: Record<string, string | number>,
): void {
  for (const key in attrs) {
    element.setAttribute(key, String(attrs[key]));
  }
}

export function clearNode(node: Element): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}
