/** Single stylesheet shared by the live page and the self-contained export. */

export const STYLES = `
:root { color-scheme: light; }
body { font-family: system-ui, sans-serif; margin: 0; color: #1c2430; background: #fafbfc; }
main { max-width: 62rem; margin: 0 auto; padding: 1.5rem; }
h1 { font-size: 1.4rem; }
form.eval-form { display: flex; gap: .6rem; flex-wrap: wrap; align-items: end; margin-bottom: 1.2rem; }
form.eval-form label { display: flex; flex-direction: column; font-size: .85rem; gap: .2rem; }
form.eval-form input, form.eval-form select { padding: .45rem .6rem; border: 1px solid #c8d2dc; border-radius: 6px; min-width: 16rem; }
form.eval-form select { min-width: 8rem; }
form.eval-form button, .exports button { padding: .5rem 1rem; border: 0; border-radius: 6px; background: #1f6feb; color: white; cursor: pointer; }
form.eval-form button:disabled, .exports button:disabled { background: #b6c2cf; cursor: not-allowed; }
.exports { display: flex; gap: .6rem; margin: .8rem 0; }
.report-header { text-align: center; }
.gauge { --value: 0; width: 11rem; height: 11rem; border-radius: 50%; margin: 1rem auto;
  background: conic-gradient(#2f7d46 calc(var(--value) * 1%), #e1e7ed 0);
  display: flex; flex-direction: column; align-items: center; justify-content: center; position: relative; }
.gauge::before { content: ""; position: absolute; inset: 1.1rem; background: #fafbfc; border-radius: 50%; }
.gauge-value { position: relative; font-size: 1.7rem; font-weight: 700; }
.gauge-caption { position: relative; font-size: .8rem; color: #57606a; }
.group-bars { display: flex; gap: .8rem; margin: 1rem 0 2rem; }
.group-bar { flex: 1; background: #f0f3f6; border-radius: 8px; padding: .7rem; text-align: center; }
.group-label { display: block; font-size: .85rem; color: #57606a; }
.group-score { font-weight: 700; }
.bar { height: 6px; background: #d9e1e8; border-radius: 3px; margin-top: .5rem; overflow: hidden; }
.bar span { display: block; height: 100%; background: #2f7d46; }
.group-section h2 { border-bottom: 2px solid #e1e7ed; padding-bottom: .3rem; margin-top: 2rem; }
details.indicator-row { border: 1px solid #e1e7ed; border-radius: 8px; margin: .5rem 0; background: white; }
details.indicator-row summary { display: flex; gap: .6rem; align-items: center; padding: .6rem .8rem; cursor: pointer; flex-wrap: wrap; }
details.indicator-row[open] summary { border-bottom: 1px solid #e1e7ed; }
.indicator-id { font-family: ui-monospace, monospace; font-size: .85rem; color: #57606a; }
.indicator-name { flex: 1; font-weight: 600; }
.badge { padding: .12rem .55rem; border-radius: 9px; background: #e4ecf4; font-size: .78rem; white-space: nowrap; }
.badge.points.pass { background: #dcefe2; }
.badge.points.improve { background: #fdecdf; }
.badge.dependency { background: #f3e8d9; }
.indicator-fields { margin: 0; padding: .8rem 1rem; display: grid; grid-template-columns: 14rem 1fr; gap: .45rem .8rem; }
.indicator-fields dt { font-weight: 600; color: #57606a; }
.indicator-fields dd { margin: 0; overflow-wrap: anywhere; }
.nothing-to-improve { color: #2f7d46; }
.pending { padding: 2rem; text-align: center; color: #57606a; }
.error { background: #fbe9e7; border: 1px solid #f3b0a6; border-radius: 8px; padding: 1rem; }
.error .retry { margin-top: .5rem; padding: .4rem .9rem; border: 0; border-radius: 6px; background: #c0392b; color: white; cursor: pointer; }
`;
