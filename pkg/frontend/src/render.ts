import { CategoryPicks, ClassifyResult, LinkRow, RankedCategory } from "./api.js";

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/**
 * Address-bar result rows, in the exact order the service returned them —
 * the server already ranked by frecency, the client must not reorder.
 * Frecency and visit count are printed straight from the payload.
 */
export function renderLinks(links: LinkRow[], selected = -1): string {
  if (links.length === 0) {
    return `<li class="empty">no matches</li>`;
  }
  return links
    .map((link, i) => {
      const cls = i === selected ? ` class="selected"` : "";
      return (
        `<li${cls} data-url="${escapeHtml(link.url)}">` +
        `<span class="url">${escapeHtml(link.url)}</span>` +
        `<span class="visits">${link.visit_count} visits</span>` +
        `<span class="frecency">${link.frecency}</span>` +
        `</li>`
      );
    })
    .join("");
}

/**
 * One probability bar per category, in response order. The service sends
 * the ranking already sorted; rendering does no sorting of its own, so
 * the bar order is exactly the order in the payload. Bar width is the
 * probability as a CSS percentage; the printed number is the payload
 * probability itself.
 */
export function renderBars(ranking: RankedCategory[]): string {
  if (ranking.length === 0) {
    return `<div class="empty">no history yet</div>`;
  }
  return ranking
    .map((row) => {
      const width = (row.probability * 100).toFixed(2);
      return (
        `<div class="bar-row" data-category="${escapeHtml(row.category)}">` +
        `<span class="label">${escapeHtml(row.category)}</span>` +
        `<span class="track"><span class="fill" style="width:${width}%"></span></span>` +
        `<span class="value">${row.probability.toFixed(4)}</span>` +
        `</div>`
      );
    })
    .join("");
}

/** Per-category suggestion lists, again in response order. */
export function renderRecommendations(recommendations: CategoryPicks[]): string {
  return recommendations
    .map((pick) => {
      const items =
        pick.urls.length === 0
          ? `<li class="empty">no suggestions</li>`
          : pick.urls
              .map((url) => {
                const safe = escapeHtml(url);
                return `<li><a href="${safe}" target="_blank" rel="noopener">${safe}</a></li>`;
              })
              .join("");
      return (
        `<section class="category" data-category="${escapeHtml(pick.category)}">` +
        `<h3>${escapeHtml(pick.category)}</h3><ul>${items}</ul></section>`
      );
    })
    .join("");
}

/** Winning category plus the per-category score table, in payload order. */
export function renderClassification(result: ClassifyResult): string {
  const rows = Object.entries(result.scores)
    .map(
      ([category, score]) =>
        `<tr><td>${escapeHtml(category)}</td><td>${score}</td></tr>`,
    )
    .join("");
  return (
    `<p class="verdict">${escapeHtml(result.url)} &rarr; ` +
    `<strong>${escapeHtml(result.category)}</strong></p>` +
    `<table><thead><tr><th>category</th><th>log score</th></tr></thead>` +
    `<tbody>${rows}</tbody></table>`
  );
}
